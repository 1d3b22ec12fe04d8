//! The lamplighter group `Z≀Z`.
//!
//! An element `(f, k)` is a finitely supported lamp configuration `f: Z -> Z`
//! and a shift `k`, with `(f₁,k₁)(f₂,k₂) = (f₁ + τ_{k₁}f₂, k₁+k₂)` where
//! `(τ_k f)(i) = f(i-k)`. Generators: the shift `a = (0,1)` and the lamp
//! `b = (δ₀,0)`.

use std::fmt;
use std::str::FromStr;

use super::sparse::{parse_sparse, SparseVec};
use crate::group::{GeneratingSet, Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct LamplighterElement {
    pub lamps: SparseVec<i64>,
    pub shift: i64,
}

impl LamplighterElement {
    pub fn new(lamps: SparseVec<i64>, shift: i64) -> Self {
        LamplighterElement { lamps, shift }
    }

    pub fn shift_only(k: i64) -> Self {
        Self::new(SparseVec::zero(), k)
    }

    pub fn lamps_only(lamps: SparseVec<i64>) -> Self {
        Self::new(lamps, 0)
    }

    pub fn is_identity(&self) -> bool {
        self.shift == 0 && self.lamps.is_zero()
    }

    pub fn mul(&self, other: &Self) -> Self {
        LamplighterElement {
            lamps: self.lamps.plus(&other.lamps.shift(self.shift)),
            shift: self.shift + other.shift,
        }
    }

    pub fn inv(&self) -> Self {
        LamplighterElement {
            lamps: self.lamps.shift(-self.shift).negated(),
            shift: -self.shift,
        }
    }
}

impl fmt::Display for LamplighterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "lamps:{};shift:{}", self.lamps, self.shift)
    }
}

impl FromStr for LamplighterElement {
    type Err = GroupError;
    /// `lamps:0=1,3=-2;shift:2`; either section may be omitted.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut out = LamplighterElement::default();
        for section in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            let (key, value) = section
                .split_once(':')
                .ok_or_else(|| err("expected `lamps:` or `shift:` section"))?;
            match key.trim() {
                "lamps" => out.lamps = parse_sparse(value, |v| v.parse().ok()).ok_or_else(|| err("bad lamp list"))?,
                "shift" => out.shift = value.trim().parse().map_err(|_| err("bad shift"))?,
                other => return Err(err(&format!("unknown section `{other}`"))),
            }
        }
        Ok(out)
    }
}

#[derive(Debug, Clone)]
pub struct Lamplighter {
    gens: GeneratingSet<LamplighterElement>,
}

impl Default for Lamplighter {
    fn default() -> Self {
        Self::new()
    }
}

impl Lamplighter {
    pub fn new() -> Self {
        let gens = GeneratingSet::symmetrize(
            vec![("a".into(), Self::a()), ("b".into(), Self::b())],
            &LamplighterElement::default(),
            LamplighterElement::inv,
        );
        Lamplighter { gens }
    }

    pub fn a() -> LamplighterElement {
        LamplighterElement::shift_only(1)
    }

    pub fn b() -> LamplighterElement {
        LamplighterElement::lamps_only(SparseVec::delta(0, 1))
    }
}

impl Group for Lamplighter {
    type Element = LamplighterElement;

    fn name(&self) -> String {
        "lamplighter".into()
    }

    fn identity(&self) -> LamplighterElement {
        LamplighterElement::default()
    }

    fn mul(&self, a: &LamplighterElement, b: &LamplighterElement) -> LamplighterElement {
        a.mul(b)
    }

    fn inv(&self, a: &LamplighterElement) -> LamplighterElement {
        a.inv()
    }

    fn generators(&self) -> &GeneratingSet<LamplighterElement> {
        &self.gens
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ab_and_ba_differ() {
        let l = Lamplighter::new();
        let (a, b) = (Lamplighter::a(), Lamplighter::b());
        let ba = l.mul(&b, &a);
        let ab = l.mul(&a, &b);
        assert_eq!(ba, LamplighterElement::new(SparseVec::delta(0, 1), 1));
        assert_eq!(ab, LamplighterElement::new(SparseVec::delta(1, 1), 1));
        assert_ne!(ab, ba);
    }

    #[test]
    fn conjugating_lamp_by_shift_moves_it() {
        let l = Lamplighter::new();
        let g = l.conjugate(&Lamplighter::a(), &Lamplighter::b());
        assert_eq!(g, LamplighterElement::lamps_only(SparseVec::delta(1, 1)));
    }

    #[test]
    fn parse_display_roundtrip() {
        let g: LamplighterElement = "lamps:0=1,3=-2;shift:2".parse().unwrap();
        assert_eq!(g.to_string(), "lamps:0=1,3=-2;shift:2");
        assert_eq!(
            "shift:-1".parse::<LamplighterElement>().unwrap(),
            Lamplighter::a().inv()
        );
        assert!("lamp:0=1".parse::<LamplighterElement>().is_err());
    }
}
