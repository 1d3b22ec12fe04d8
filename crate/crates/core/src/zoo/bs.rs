//! The Baumslag–Solitar group BS(1,2) in affine normal form.
//!
//! `(k, q)` stands for the affine map `x ↦ 2^k x + q` with `q` a dyadic
//! rational, so `(k₁,q₁)(k₂,q₂) = (k₁+k₂, q₁ + 2^{k₁} q₂)`. The generators are
//! `a = (1,0)` and `b = (0,1)`, and `a b a⁻¹ = b²`.

use std::fmt;
use std::str::FromStr;

use crate::group::{GeneratingSet, Group, GroupError};

/// A dyadic rational `num / 2^exp` with `exp` minimal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Dyadic {
    num: i128,
    exp: u32,
}

impl Dyadic {
    pub fn new(num: i128, exp: u32) -> Self {
        let mut d = Dyadic { num, exp };
        if d.num == 0 {
            d.exp = 0;
        }
        while d.exp > 0 && d.num % 2 == 0 {
            d.num /= 2;
            d.exp -= 1;
        }
        d
    }

    pub fn integer(n: i128) -> Self {
        Dyadic::new(n, 0)
    }

    pub fn numerator(&self) -> i128 {
        self.num
    }

    pub fn exponent(&self) -> u32 {
        self.exp
    }

    pub fn is_integer(&self) -> bool {
        self.exp == 0
    }

    /// `2^k · self`.
    pub fn scale(self, k: i64) -> Self {
        if k >= 0 {
            let shift = k as u32;
            let absorbed = shift.min(self.exp);
            let num = self
                .num
                .checked_mul(
                    1i128
                        .checked_shl(shift - absorbed)
                        .filter(|m| *m > 0)
                        .expect("dyadic overflow"),
                )
                .expect("dyadic overflow");
            Dyadic::new(num, self.exp - absorbed)
        } else {
            Dyadic::new(self.num, self.exp + k.unsigned_abs() as u32)
        }
    }
}

impl std::ops::Add for Dyadic {
    type Output = Dyadic;

    fn add(self, other: Self) -> Self {
        let exp = self.exp.max(other.exp);
        let lift = |d: Dyadic| d.num.checked_mul(1i128 << (exp - d.exp)).expect("dyadic overflow");
        Dyadic::new(lift(self).checked_add(lift(other)).expect("dyadic overflow"), exp)
    }
}

impl std::ops::Neg for Dyadic {
    type Output = Dyadic;

    fn neg(self) -> Self {
        Dyadic {
            num: -self.num,
            exp: self.exp,
        }
    }
}

impl fmt::Display for Dyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exp == 0 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, 1u128 << self.exp)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct BsElement {
    pub k: i64,
    pub q: Dyadic,
}

impl BsElement {
    pub fn new(k: i64, q: Dyadic) -> Self {
        BsElement { k, q }
    }
}

impl fmt::Display for BsElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.k, self.q)
    }
}

impl FromStr for BsElement {
    type Err = GroupError;
    /// `k,q` with `q` an integer or `n/2^e` written as `n/d`, `d` a power of 2.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let (k, q) = s.split_once(',').ok_or_else(|| err("expected `k,q`"))?;
        let k: i64 = k.trim().parse().map_err(|_| err("bad exponent"))?;
        let q = match q.trim().split_once('/') {
            None => Dyadic::integer(q.trim().parse().map_err(|_| err("bad translation"))?),
            Some((n, d)) => {
                let n: i128 = n.trim().parse().map_err(|_| err("bad numerator"))?;
                let d: u128 = d.trim().parse().map_err(|_| err("bad denominator"))?;
                if d == 0 || !d.is_power_of_two() {
                    return Err(err("denominator must be a power of two"));
                }
                Dyadic::new(n, d.trailing_zeros())
            }
        };
        Ok(BsElement::new(k, q))
    }
}

#[derive(Debug, Clone)]
pub struct BaumslagSolitar {
    gens: GeneratingSet<BsElement>,
}

impl Default for BaumslagSolitar {
    fn default() -> Self {
        Self::new()
    }
}

impl BaumslagSolitar {
    pub fn new() -> Self {
        let gens = GeneratingSet::symmetrize(
            vec![("a".into(), Self::a()), ("b".into(), Self::b())],
            &BsElement::default(),
            bs_inv,
        );
        BaumslagSolitar { gens }
    }

    pub fn a() -> BsElement {
        BsElement::new(1, Dyadic::default())
    }

    pub fn b() -> BsElement {
        BsElement::new(0, Dyadic::integer(1))
    }
}

pub fn bs_mul(a: &BsElement, b: &BsElement) -> BsElement {
    BsElement::new(a.k + b.k, a.q + b.q.scale(a.k))
}

pub fn bs_inv(a: &BsElement) -> BsElement {
    BsElement::new(-a.k, -a.q.scale(-a.k))
}

impl Group for BaumslagSolitar {
    type Element = BsElement;

    fn name(&self) -> String {
        "bs12".into()
    }

    fn identity(&self) -> BsElement {
        BsElement::default()
    }

    fn mul(&self, a: &BsElement, b: &BsElement) -> BsElement {
        bs_mul(a, b)
    }

    fn inv(&self, a: &BsElement) -> BsElement {
        bs_inv(a)
    }

    fn generators(&self) -> &GeneratingSet<BsElement> {
        &self.gens
    }
}
