use crate::chebyshev::check_indices;
use crate::Result;

/// One step of the Euclidean-algorithm recursion from `1:1` to `p:q`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepOp {
    /// Heron transform; the exceptional factors `(b+a)^m_plus (b−a)^m_minus`
    /// are divided out of the algebraic transform.
    Heron { m_plus: u32, m_minus: u32 },
    Swap,
}

impl StepOp {
    pub fn symbol(self) -> &'static str {
        match self {
            StepOp::Heron { .. } => "H",
            StepOp::Swap => "S",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScheduleStep {
    pub op: StepOp,
    pub from: (u32, u32),
    pub to: (u32, u32),
}

/// Exponents `(m+, m−)` of `b+a` and `b−a` in `f_{p,q−p} ∘ H`, for `p < q`.
pub fn heron_exponents(p: u32, q: u32) -> (u32, u32) {
    debug_assert!(p < q);
    let r = q - p;
    if r % 2 == 1 {
        ((r - 1) / 2, (r - 1) / 2)
    } else {
        (r / 2, r / 2 - 1)
    }
}

/// Steps that carry `C_{1,1}` to `C_{p,q}`, in order of application.
///
/// `p < q` comes from `p:(q−p)` by `H`; `p > q` comes from `q:p` by `S`.
pub fn schedule(p: u32, q: u32) -> Result<Vec<ScheduleStep>> {
    check_indices(p, q)?;
    let mut steps = Vec::new();
    let (mut p, mut q) = (p, q);
    while (p, q) != (1, 1) {
        if p < q {
            let (m_plus, m_minus) = heron_exponents(p, q);
            steps.push(ScheduleStep {
                op: StepOp::Heron { m_plus, m_minus },
                from: (p, q - p),
                to: (p, q),
            });
            q -= p;
        } else {
            steps.push(ScheduleStep {
                op: StepOp::Swap,
                from: (q, p),
                to: (p, q),
            });
            std::mem::swap(&mut p, &mut q);
        }
    }
    steps.reverse();
    Ok(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn symbols(p: u32, q: u32) -> Vec<&'static str> {
        schedule(p, q).unwrap().iter().map(|s| s.op.symbol()).collect()
    }

    #[test]
    fn examples() {
        assert_eq!(symbols(1, 3), ["H", "H"]);
        assert_eq!(symbols(3, 4), ["H", "H", "S", "H"]);
        assert!(symbols(1, 1).is_empty());
        assert_eq!(symbols(2, 1), ["H", "S"]);
        assert_eq!(schedule(2, 4), Err(Error::NotCoprime { p: 2, q: 4 }));
    }

    #[test]
    fn steps_chain() {
        let steps = schedule(5, 7).unwrap();
        assert_eq!(steps[0].from, (1, 1));
        assert_eq!(steps.last().unwrap().to, (5, 7));
        for w in steps.windows(2) {
            assert_eq!(w[0].to, w[1].from);
        }
    }

    #[test]
    fn exponents_by_parity() {
        assert_eq!(heron_exponents(1, 2), (0, 0));
        assert_eq!(heron_exponents(1, 3), (1, 0));
        assert_eq!(heron_exponents(1, 4), (1, 1));
        assert_eq!(heron_exponents(3, 7), (2, 1));
    }
}
