use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use crate::chebyshev::check_indices;
use crate::cremona::GatePoint;
use crate::{Error, Result};

/// Number of real parameter values mapped to each of the six gate points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct GateMultiplicities {
    pub e_plus: u32,
    pub e_minus: u32,
    pub f_plus: u32,
    pub f_minus: u32,
    pub g_plus: u32,
    pub g_minus: u32,
}

impl GateMultiplicities {
    /// `None` for `E0`, `F0`, `G0`.
    pub fn get(&self, g: GatePoint) -> Option<u32> {
        match g {
            GatePoint::EPlus => Some(self.e_plus),
            GatePoint::EMinus => Some(self.e_minus),
            GatePoint::FPlus => Some(self.f_plus),
            GatePoint::FMinus => Some(self.f_minus),
            GatePoint::GPlus => Some(self.g_plus),
            GatePoint::GMinus => Some(self.g_minus),
            _ => None,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = (GatePoint, u32)> + '_ {
        GatePoint::GATES.into_iter().map(|g| (g, self.get(g).expect("gate")))
    }
}

/// Closed-form gate multiplicities by parity of `p` and `q`.
pub fn gate_table(p: u32, q: u32) -> Result<GateMultiplicities> {
    check_indices(p, q)?;
    let s = p + q;
    let (e_plus, e_minus) = if p % 2 == 1 { ((p - 1) / 2, (p - 1) / 2) } else { (p / 2 - 1, p / 2) };
    let (f_plus, f_minus) = if q % 2 == 1 { ((q - 1) / 2, (q - 1) / 2) } else { (q / 2 - 1, q / 2) };
    let (g_plus, g_minus) = if s % 2 == 1 { ((s - 1) / 2, (s - 1) / 2) } else { (s / 2, s / 2 - 1) };
    Ok(GateMultiplicities {
        e_plus,
        e_minus,
        f_plus,
        f_minus,
        g_plus,
        g_minus,
    })
}

/// A passage through a gate point at `t = cos(kπ/n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PassageEvent {
    pub gate: GatePoint,
    pub k: u32,
    pub n: u32,
}

impl PassageEvent {
    pub fn t(&self) -> f64 {
        (self.k as f64 * PI / self.n as f64).cos()
    }

    /// Order by `t`, i.e. by decreasing angle `kπ/n`.
    fn cmp_t(&self, other: &PassageEvent) -> Ordering {
        let lhs = u64::from(other.k) * u64::from(self.n);
        let rhs = u64::from(self.k) * u64::from(other.n);
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for PassageEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} at t = cos({}π/{})", self.gate, self.k, self.n)
    }
}

/// Gate points in order of increasing `t`, between the two visits to `G0`
/// at `t = ±∞`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PassageCode {
    pub events: Vec<PassageEvent>,
}

impl PassageCode {
    /// Labels including the `G0` bookends.
    pub fn labels(&self) -> Vec<&'static str> {
        let mut out = vec![GatePoint::G0.label()];
        out.extend(self.events.iter().map(|e| e.gate.label()));
        out.push(GatePoint::G0.label());
        out
    }

    pub fn count(&self, g: GatePoint) -> u32 {
        self.events.iter().filter(|e| e.gate == g).count() as u32
    }
}

impl fmt::Display for PassageCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.labels().join(" "))
    }
}

/// Real passages through the gate points.
///
/// With `θ = kπ/n`, `E±` is hit for `n = p`, `F±` for `n = q` and `G±` for
/// `n = p + q`, `k = 1..n−1`. The sign alternates in `k`: `E` and `F` start
/// with `−` at `k = 1`, `G` starts with `+`.
pub fn passage_code(p: u32, q: u32) -> Result<PassageCode> {
    check_indices(p, q)?;
    let mut events = Vec::new();
    let families = [
        (p, GatePoint::EMinus, GatePoint::EPlus),
        (q, GatePoint::FMinus, GatePoint::FPlus),
        (p + q, GatePoint::GPlus, GatePoint::GMinus),
    ];
    for (n, odd, even) in families {
        for k in 1..n {
            let gate = if k % 2 == 1 { odd } else { even };
            events.push(PassageEvent { gate, k, n });
        }
    }
    events.sort_by(PassageEvent::cmp_t);
    if let Some(w) = events.windows(2).find(|w| w[0].cmp_t(&w[1]) == Ordering::Equal) {
        return Err(Error::CoincidentPassage(format!("{} and {}", w[0], w[1])));
    }
    Ok(PassageCode { events })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(m: GateMultiplicities) -> [u32; 6] {
        [m.e_plus, m.e_minus, m.f_plus, m.f_minus, m.g_plus, m.g_minus]
    }

    #[test]
    fn table_examples() {
        assert_eq!(row(gate_table(2, 3).unwrap()), [0, 1, 1, 1, 2, 2]);
        assert_eq!(row(gate_table(1, 2).unwrap()), [0, 0, 0, 1, 1, 1]);
        assert_eq!(row(gate_table(1, 1).unwrap()), [0, 0, 0, 0, 1, 0]);
    }

    #[test]
    fn codes() {
        assert_eq!(passage_code(1, 2).unwrap().to_string(), "G0 G- F- G+ G0");
        assert_eq!(passage_code(1, 3).unwrap().to_string(), "G0 G+ F+ G- F- G+ G0");
        assert_eq!(passage_code(2, 3).unwrap().to_string(), "G0 G- F+ G+ E- G- F- G+ G0");
        assert_eq!(passage_code(1, 1).unwrap().to_string(), "G0 G+ G0");
    }

    #[test]
    fn counts_agree_with_table() {
        for p in 1..12u32 {
            for q in 1..12u32 {
                let Ok(table) = gate_table(p, q) else { continue };
                let code = passage_code(p, q).unwrap();
                for (g, m) in table.iter() {
                    assert_eq!(code.count(g), m, "{p}:{q} at {g}");
                }
            }
        }
    }

    #[test]
    fn final_events() {
        let code = passage_code(3, 5).unwrap();
        let last = |pred: fn(GatePoint) -> bool| *code.events.iter().rev().find(|e| pred(e.gate)).unwrap();
        assert_eq!(last(|g| matches!(g, GatePoint::EPlus | GatePoint::EMinus)), PassageEvent { gate: GatePoint::EMinus, k: 1, n: 3 });
        assert_eq!(last(|g| matches!(g, GatePoint::FPlus | GatePoint::FMinus)), PassageEvent { gate: GatePoint::FMinus, k: 1, n: 5 });
        assert_eq!(last(|g| matches!(g, GatePoint::GPlus | GatePoint::GMinus)), PassageEvent { gate: GatePoint::GPlus, k: 1, n: 8 });
    }
}
