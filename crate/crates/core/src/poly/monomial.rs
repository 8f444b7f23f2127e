use std::cmp::Ordering;
use std::fmt;

/// One of the three homogeneous coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    A,
    B,
    C,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::A, Var::B, Var::C];

    pub fn index(self) -> usize {
        self as usize
    }

    pub fn name(self) -> char {
        match self {
            Var::A => 'a',
            Var::B => 'b',
            Var::C => 'c',
        }
    }
}

/// The monomial `a^i b^j c^k`.
///
/// Ordered graded-lexicographically with `a > b > c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial3 {
    pub exps: [u32; 3],
}

impl Monomial3 {
    pub const ONE: Monomial3 = Monomial3 { exps: [0, 0, 0] };

    pub fn new(i: u32, j: u32, k: u32) -> Self {
        Monomial3 { exps: [i, j, k] }
    }

    pub fn var(v: Var) -> Self {
        let mut exps = [0; 3];
        exps[v.index()] = 1;
        Monomial3 { exps }
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn exp(&self, v: Var) -> u32 {
        self.exps[v.index()]
    }

    pub fn mul(&self, other: &Monomial3) -> Monomial3 {
        Monomial3 {
            exps: [
                self.exps[0] + other.exps[0],
                self.exps[1] + other.exps[1],
                self.exps[2] + other.exps[2],
            ],
        }
    }

    /// `self / other` when `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial3) -> Option<Monomial3> {
        Some(Monomial3 {
            exps: [
                self.exps[0].checked_sub(other.exps[0])?,
                self.exps[1].checked_sub(other.exps[1])?,
                self.exps[2].checked_sub(other.exps[2])?,
            ],
        })
    }

    pub fn swap_ab(&self) -> Monomial3 {
        Monomial3::new(self.exps[1], self.exps[0], self.exps[2])
    }
}

impl Ord for Monomial3 {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.exps[0].cmp(&other.exps[0]))
            .then(self.exps[1].cmp(&other.exps[1]))
            .then(self.exps[2].cmp(&other.exps[2]))
    }
}

impl PartialOrd for Monomial3 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial3 {
    /// `a^2*c`; the constant monomial renders as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}
