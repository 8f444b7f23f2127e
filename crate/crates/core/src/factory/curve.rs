use std::collections::{BTreeMap, HashMap};
use std::sync::RwLock;

use num_traits::Zero;

use super::gates::{gate_table, passage_code, GateMultiplicities, PassageCode};
use super::schedule::{schedule, ScheduleStep, StepOp};
use crate::chebyshev::{check_indices, parametrization, ParamTriple};
use crate::cremona::{
    algebraic_multiplicity, check_transform_multiplicities, proper_transform, GatePoint, ProjPoint,
    QuadMap,
};
use crate::poly::{HomoPoly3, UniPoly};
use crate::{Error, Result};

/// A Chebyshev curve with its implicit equation and singularity data.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveRecord {
    pub p: u32,
    pub q: u32,
    pub equation: HomoPoly3,
    pub degree: u32,
    pub gate_multiplicities: GateMultiplicities,
    pub source_multiplicity: u32,
    pub code: PassageCode,
}

impl CurveRecord {
    pub fn on_curve(&self, x: &ProjPoint) -> bool {
        self.equation.eval(&x.scalars()).is_zero()
    }
}

/// `f ∘ Γ_{p,q}` as a polynomial in `t`.
pub fn compose_with_param(f: &HomoPoly3, param: &ParamTriple) -> UniPoly {
    f.substitute(param.components())
}

/// Multiplicities at the nine special points, keyed by point.
pub type Profile = BTreeMap<GatePoint, u32>;

pub fn measure_profile(f: &HomoPoly3) -> Profile {
    GatePoint::ALL
        .into_iter()
        .map(|g| (g, algebraic_multiplicity(f, &g.point())))
        .collect()
}

/// Predicted and measured data for one schedule step.
///
/// `predicted` covers only the points the transformation rule speaks about.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepReport {
    pub step: ScheduleStep,
    pub predicted_degree: u32,
    pub measured_degree: u32,
    pub predicted: Profile,
    pub measured: Profile,
}

impl StepReport {
    pub fn agrees(&self) -> bool {
        self.predicted_degree == self.measured_degree
            && self.predicted.iter().all(|(g, m)| self.measured.get(g) == Some(m))
    }
}

/// Predicted degree and multiplicities after a step, from the curve before it.
pub fn predict_step(op: StepOp, degree: u32, before: &Profile) -> Result<(u32, Profile)> {
    let m = |g: GatePoint| before[&g];
    match op {
        StepOp::Swap => Ok((degree, before.iter().map(|(g, &k)| (g.swapped(), k)).collect())),
        StepOp::Heron { .. } => {
            // H^-1 blows down b, c+a, c−a onto G0, G−, G+; these lines pass
            // through the pairs {F+, F−}, {F0, F−}, {F0, F+} of its base points.
            let (new_degree, [g0, g_minus, g_plus]) = check_transform_multiplicities(
                degree,
                [m(GatePoint::F0), m(GatePoint::FPlus), m(GatePoint::FMinus)],
            )?;
            let mut out = Profile::new();
            out.insert(GatePoint::G0, g0);
            out.insert(GatePoint::GPlus, g_plus);
            out.insert(GatePoint::GMinus, g_minus);
            // off its exceptional lines H^-1 fixes E± and sends G± to F∓
            out.insert(GatePoint::EPlus, m(GatePoint::EPlus));
            out.insert(GatePoint::EMinus, m(GatePoint::EMinus));
            out.insert(GatePoint::FMinus, m(GatePoint::GPlus));
            out.insert(GatePoint::FPlus, m(GatePoint::GMinus));
            Ok((new_degree, out))
        }
    }
}

/// Builds and memoizes `f_{p,q}` along the Euclidean schedule.
///
/// Readers share the memo; a writer only ever inserts the same canonical
/// equation for a key, so racing builds are harmless.
#[derive(Debug, Default)]
pub struct CurveFactory {
    memo: RwLock<HashMap<(u32, u32), HomoPoly3>>,
}

impl CurveFactory {
    pub fn new() -> Self {
        Self::default()
    }

    /// Seeds the memo, e.g. from a verified cache file.
    pub fn with_entries<I: IntoIterator<Item = ((u32, u32), HomoPoly3)>>(entries: I) -> Self {
        CurveFactory {
            memo: RwLock::new(entries.into_iter().collect()),
        }
    }

    /// Snapshot sorted by key.
    pub fn entries(&self) -> Vec<((u32, u32), HomoPoly3)> {
        let memo = self.memo.read().expect("memo lock");
        let mut out: Vec<_> = memo.iter().map(|(k, v)| (*k, v.clone())).collect();
        out.sort_by_key(|(k, _)| *k);
        out
    }

    fn cached(&self, key: (u32, u32)) -> Option<HomoPoly3> {
        self.memo.read().expect("memo lock").get(&key).cloned()
    }

    fn store(&self, key: (u32, u32), f: &HomoPoly3) {
        self.memo.write().expect("memo lock").insert(key, f.clone());
    }

    /// The canonical `f_{p,q}`.
    pub fn equation(&self, p: u32, q: u32) -> Result<HomoPoly3> {
        if let Some(f) = self.cached((p, q)) {
            return Ok(f);
        }
        let steps = schedule(p, q)?;
        let start = steps.iter().rposition(|s| self.cached(s.from).is_some());
        let (mut f, rest) = match start {
            Some(i) => (self.cached(steps[i].from).expect("cached"), &steps[i..]),
            None => {
                let seed = seed_line();
                self.store((1, 1), &seed);
                (seed, &steps[..])
            }
        };
        for step in rest {
            f = apply_step(&f, step)?;
            self.store(step.to, &f);
        }
        Ok(f)
    }

    pub fn build_curve(&self, p: u32, q: u32) -> Result<CurveRecord> {
        check_indices(p, q)?;
        let equation = self.equation(p, q)?;
        Ok(CurveRecord {
            p,
            q,
            degree: equation.degree(),
            equation,
            gate_multiplicities: gate_table(p, q)?,
            source_multiplicity: p.min(q),
            code: passage_code(p, q)?,
        })
    }

    /// Replays the schedule, measuring multiplicities before and after every
    /// step and comparing them with the transformation rule.
    pub fn trace(&self, p: u32, q: u32) -> Result<Vec<StepReport>> {
        let steps = schedule(p, q)?;
        let mut f = self.equation(1, 1)?;
        let mut before = measure_profile(&f);
        let mut reports = Vec::with_capacity(steps.len());
        for step in steps {
            let (predicted_degree, predicted) = predict_step(step.op, f.degree(), &before)?;
            f = self.equation(step.to.0, step.to.1)?;
            let measured = measure_profile(&f);
            reports.push(StepReport {
                step,
                predicted_degree,
                measured_degree: f.degree(),
                predicted,
                measured: measured.clone(),
            });
            before = measured;
        }
        Ok(reports)
    }
}

/// `f_{1,1}`: the line `b = a`.
fn seed_line() -> HomoPoly3 {
    HomoPoly3::linear(-1, 1, 0).canonical()
}

fn apply_step(f: &HomoPoly3, step: &ScheduleStep) -> Result<HomoPoly3> {
    let (p, q) = step.to;
    let g = match step.op {
        StepOp::Swap => f.swap_ab().canonical(),
        StepOp::Heron { m_plus, m_minus } => {
            // exceptional lines of H in order b+a, b−a, c
            let g = proper_transform(f, &QuadMap::heron(), &[m_plus, m_minus, 0])?;
            if g.degree() != p + q - 1 {
                return Err(Error::Invariant(format!(
                    "proper transform for {p}:{q} has degree {}, expected {}",
                    g.degree(),
                    p + q - 1
                )));
            }
            for line in [HomoPoly3::linear(1, 1, 0), HomoPoly3::linear(-1, 1, 0)] {
                if g.is_divisible_by(&line) {
                    return Err(Error::Invariant(format!("{line} still divides f_{{{p},{q}}}")));
                }
            }
            g
        }
    };
    Ok(g)
}

/// `f_{p,q}` from a fresh factory.
pub fn build_curve(p: u32, q: u32) -> Result<CurveRecord> {
    CurveFactory::new().build_curve(p, q)
}

pub fn on_curve(rec: &CurveRecord, x: &ProjPoint) -> bool {
    rec.on_curve(x)
}

/// Checks `f_{p,q} ∘ Γ_{p,q} = 0` identically.
pub fn annihilates(f: &HomoPoly3, p: u32, q: u32) -> Result<bool> {
    Ok(compose_with_param(f, &parametrization(p, q)?).is_zero())
}
