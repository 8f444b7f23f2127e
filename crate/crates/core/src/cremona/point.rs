use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::poly::Scalar;
use crate::{Error, Result};

/// A point `[a:b:c]` of the rational projective plane.
///
/// Always stored as its canonical representative: coprime integer
/// coordinates with the first non-zero coordinate positive. Equality is
/// therefore equality up to a common non-zero factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    coords: [BigInt; 3],
}

impl ProjPoint {
    pub fn new(coords: [Scalar; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let lcm = coords.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints = coords.map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer());
        Self::from_bigints(ints)
    }

    pub fn from_bigints(coords: [BigInt; 3]) -> Result<Self> {
        if coords.iter().all(Zero::is_zero) {
            return Err(Error::ZeroPoint);
        }
        let mut g = coords.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
        let first = coords.iter().find(|c| !c.is_zero()).expect("non-zero coordinate");
        if first.is_negative() {
            g = -g;
        }
        Ok(ProjPoint {
            coords: coords.map(|c| c / &g),
        })
    }

    pub fn from_ints(a: i64, b: i64, c: i64) -> Result<Self> {
        Self::from_bigints([a.into(), b.into(), c.into()])
    }

    pub fn coords(&self) -> &[BigInt; 3] {
        &self.coords
    }

    pub fn scalars(&self) -> [Scalar; 3] {
        self.coords.clone().map(Scalar::from_integer)
    }

    pub fn has_zero_coordinate(&self) -> bool {
        self.coords.iter().any(Zero::is_zero)
    }

    pub fn swap_ab(&self) -> ProjPoint {
        let [a, b, c] = self.coords.clone();
        ProjPoint::from_bigints([b, a, c]).expect("swap keeps the point non-zero")
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c] = &self.coords;
        write!(f, "[{a}:{b}:{c}]")
    }
}

/// The six gate points and the three coordinate vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GatePoint {
    EPlus,
    EMinus,
    FPlus,
    FMinus,
    GPlus,
    GMinus,
    E0,
    F0,
    G0,
}

impl GatePoint {
    pub const GATES: [GatePoint; 6] = [
        GatePoint::EPlus,
        GatePoint::EMinus,
        GatePoint::FPlus,
        GatePoint::FMinus,
        GatePoint::GPlus,
        GatePoint::GMinus,
    ];

    pub const ALL: [GatePoint; 9] = [
        GatePoint::EPlus,
        GatePoint::EMinus,
        GatePoint::FPlus,
        GatePoint::FMinus,
        GatePoint::GPlus,
        GatePoint::GMinus,
        GatePoint::E0,
        GatePoint::F0,
        GatePoint::G0,
    ];

    /// `E± = [0:1:±1]`, `F± = [1:0:±1]`, `G± = [1:±1:0]`,
    /// `E0 = [1:0:0]`, `F0 = [0:1:0]`, `G0 = [0:0:1]`.
    pub fn point(self) -> ProjPoint {
        let (a, b, c) = match self {
            GatePoint::EPlus => (0, 1, 1),
            GatePoint::EMinus => (0, 1, -1),
            GatePoint::FPlus => (1, 0, 1),
            GatePoint::FMinus => (1, 0, -1),
            GatePoint::GPlus => (1, 1, 0),
            GatePoint::GMinus => (1, -1, 0),
            GatePoint::E0 => (1, 0, 0),
            GatePoint::F0 => (0, 1, 0),
            GatePoint::G0 => (0, 0, 1),
        };
        ProjPoint::from_ints(a, b, c).expect("gate points are non-zero")
    }

    pub fn label(self) -> &'static str {
        match self {
            GatePoint::EPlus => "E+",
            GatePoint::EMinus => "E-",
            GatePoint::FPlus => "F+",
            GatePoint::FMinus => "F-",
            GatePoint::GPlus => "G+",
            GatePoint::GMinus => "G-",
            GatePoint::E0 => "E0",
            GatePoint::F0 => "F0",
            GatePoint::G0 => "G0",
        }
    }

    pub fn classify(x: &ProjPoint) -> Option<GatePoint> {
        GatePoint::ALL.into_iter().find(|g| g.point() == *x)
    }

    /// Image under the swap `[a:b:c] ↦ [b:a:c]`.
    pub fn swapped(self) -> GatePoint {
        match self {
            GatePoint::EPlus => GatePoint::FPlus,
            GatePoint::EMinus => GatePoint::FMinus,
            GatePoint::FPlus => GatePoint::EPlus,
            GatePoint::FMinus => GatePoint::EMinus,
            GatePoint::E0 => GatePoint::F0,
            GatePoint::F0 => GatePoint::E0,
            g => g,
        }
    }
}

impl fmt::Display for GatePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for GatePoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GatePoint::ALL
            .into_iter()
            .find(|g| g.label() == s)
            .ok_or_else(|| Error::Parse(format!("unknown gate point `{s}`")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ratio;

    #[test]
    fn canonical_representative() {
        let x = ProjPoint::new([ratio(1, 1), ratio(3, 2), ratio(5, 4)]).unwrap();
        assert_eq!(x.coords(), &[4.into(), 6.into(), 5.into()]);
        assert_eq!(ProjPoint::from_ints(-20, -20, -30).unwrap(), ProjPoint::from_ints(2, 2, 3).unwrap());
        assert_eq!(ProjPoint::from_ints(0, -2, 4).unwrap().to_string(), "[0:1:-2]");
        assert_eq!(ProjPoint::from_ints(0, 0, 0), Err(Error::ZeroPoint));
    }

    #[test]
    fn gate_coordinates() {
        assert_eq!(GatePoint::GMinus.point().to_string(), "[1:-1:0]");
        assert_eq!(GatePoint::classify(&ProjPoint::from_ints(-3, 0, 3).unwrap()), Some(GatePoint::FMinus));
        assert_eq!(GatePoint::classify(&ProjPoint::from_ints(1, 2, 3).unwrap()), None);
        for g in GatePoint::ALL {
            assert_eq!(g.label().parse::<GatePoint>().unwrap(), g);
            assert_eq!(g.point().swap_ab(), g.swapped().point());
        }
    }
}
