//! The free product `Z * Z/2` in alternating reduced words, acting on `Z`.
//!
//! The infinite cyclic factor is generated by `z`, the involution is `s`.
//! On the integers `z` translates by one and `s` exchanges 0 and 1, fixing
//! everything else; this action is 2-transitive.

use std::collections::HashMap;
use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use super::wreath::{PointAction, TwoTransitive};
use super::ZooError;
use crate::group::{GeneratingSet, Group, GroupError};

/// Default cap on visited point pairs in [`ZStarZ2::two_transitive_witness`].
pub const WITNESS_STATE_BUDGET: usize = 1_000_000;

/// Points up to this absolute value get geodesic two-transitivity witnesses.
pub const GEODESIC_WITNESS_RANGE: i64 = 50;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    /// `zⁿ`, `n ≠ 0`.
    Z(i64),
    Sigma,
}

impl Letter {
    fn act(self, x: i64) -> i64 {
        match self {
            Letter::Z(n) => x + n,
            Letter::Sigma => match x {
                0 => 1,
                1 => 0,
                x => x,
            },
        }
    }
}

/// A reduced word: no two adjacent `z`-powers, no two adjacent `s`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct FreeProductElement {
    letters: Vec<Letter>,
}

impl FreeProductElement {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out = FreeProductElement::default();
        for l in letters {
            out.push(l);
        }
        out
    }

    fn push(&mut self, letter: Letter) {
        match (self.letters.last_mut(), letter) {
            (_, Letter::Z(0)) => {}
            (Some(Letter::Z(m)), Letter::Z(n)) => {
                *m += n;
                if *m == 0 {
                    self.letters.pop();
                }
            }
            (Some(Letter::Sigma), Letter::Sigma) => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inv(&self) -> Self {
        FreeProductElement {
            letters: self
                .letters
                .iter()
                .rev()
                .map(|l| match *l {
                    Letter::Z(n) => Letter::Z(-n),
                    Letter::Sigma => Letter::Sigma,
                })
                .collect(),
        }
    }

    /// Image of the point `x`; the rightmost letter acts first.
    pub fn act(&self, x: i64) -> i64 {
        self.letters.iter().rev().fold(x, |x, l| l.act(x))
    }

    /// Word length in `{z, z⁻¹, s}`: reduced words are geodesic.
    pub fn length(&self) -> u64 {
        self.letters
            .iter()
            .map(|l| match l {
                Letter::Z(n) => n.unsigned_abs(),
                Letter::Sigma => 1,
            })
            .sum()
    }
}

impl fmt::Display for FreeProductElement {
    /// `z^2*s*z^-1`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        let parts: Vec<String> = self
            .letters
            .iter()
            .map(|l| match l {
                Letter::Z(1) => "z".to_string(),
                Letter::Z(n) => format!("z^{n}"),
                Letter::Sigma => "s".to_string(),
            })
            .collect();
        f.write_str(&parts.join("*"))
    }
}

impl FromStr for FreeProductElement {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: String| GroupError::Parse {
            input: s.to_string(),
            reason,
        };
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(FreeProductElement::default());
        }
        let mut letters = Vec::new();
        for token in s.split('*').map(str::trim) {
            let letter = match token {
                "s" => Letter::Sigma,
                "z" => Letter::Z(1),
                t => match t.strip_prefix("z^") {
                    Some(n) => Letter::Z(n.parse().map_err(|_| err(format!("bad exponent in `{t}`")))?),
                    None => return Err(err(format!("unknown letter `{t}`"))),
                },
            };
            letters.push(letter);
        }
        Ok(FreeProductElement::from_letters(letters))
    }
}

/// `Z * Z/2` with generators `z, z⁻¹, s` in that order.
#[derive(Debug, Clone)]
pub struct ZStarZ2 {
    gens: GeneratingSet<FreeProductElement>,
}

impl Default for ZStarZ2 {
    fn default() -> Self {
        Self::new()
    }
}

impl ZStarZ2 {
    pub fn new() -> Self {
        let gens = GeneratingSet::symmetrize(
            vec![("z".into(), Self::z()), ("s".into(), Self::sigma())],
            &FreeProductElement::default(),
            FreeProductElement::inv,
        );
        ZStarZ2 { gens }
    }

    pub fn z() -> FreeProductElement {
        FreeProductElement::from_letters([Letter::Z(1)])
    }

    pub fn sigma() -> FreeProductElement {
        FreeProductElement::from_letters([Letter::Sigma])
    }

    /// Shortest `q` with `q(t1) = 0` and `q(t2) = 1`, ties broken by the
    /// lexicographic order of words over `z < z⁻¹ < s`.
    ///
    /// Breadth-first search runs over the images `(w(t1), w(t2))`, applying
    /// the letter that acts first; the word is then read off from the target
    /// by choosing, letter by letter from the left, the smallest letter that
    /// steps back one layer.
    pub fn two_transitive_witness_with_budget(
        &self,
        t1: i64,
        t2: i64,
        budget: usize,
    ) -> Result<FreeProductElement, ZooError> {
        if t1 == t2 {
            return Err(ZooError::SamePoint(t1));
        }
        let letters = [Letter::Z(1), Letter::Z(-1), Letter::Sigma];
        let start = (t1, t2);
        let target = (0, 1);
        let mut dist: HashMap<(i64, i64), u32> = HashMap::from([(start, 0)]);
        let mut queue = VecDeque::from([start]);
        while !dist.contains_key(&target) {
            let Some(cur) = queue.pop_front() else {
                unreachable!("the action is transitive on ordered pairs");
            };
            let d = dist[&cur];
            for l in letters {
                let next = (l.act(cur.0), l.act(cur.1));
                if !dist.contains_key(&next) {
                    if dist.len() >= budget {
                        return Err(ZooError::SearchBudget { budget });
                    }
                    dist.insert(next, d + 1);
                    queue.push_back(next);
                }
            }
        }
        let mut word = Vec::new();
        let mut cur = target;
        while cur != start {
            let d = dist[&cur];
            let (letter, prev) = letters
                .iter()
                .map(|&l| {
                    let undo = match l {
                        Letter::Z(n) => Letter::Z(-n),
                        Letter::Sigma => Letter::Sigma,
                    };
                    (l, (undo.act(cur.0), undo.act(cur.1)))
                })
                .find(|(_, prev)| dist.get(prev) == Some(&(d - 1)))
                .expect("a predecessor one layer closer exists");
            word.push(letter);
            cur = prev;
        }
        Ok(FreeProductElement::from_letters(word))
    }
}

impl ZStarZ2 {
    /// Some `q` with `q(t1) = 0` and `q(t2) = 1`, not necessarily shortest:
    /// translate `t1` to 0, then walk `t2 - t1` to 1 with the transpositions
    /// `z^k s z^-k = (k k+1)`, none of which moves 0.
    pub fn constructive_witness(&self, t1: i64, t2: i64) -> Result<FreeProductElement, ZooError> {
        if t1 == t2 {
            return Err(ZooError::SamePoint(t1));
        }
        // steps in the order they act, then reversed into a word
        let mut steps = vec![Letter::Z(-t1)];
        let mut swap = |k: i64| steps.extend([Letter::Z(-k), Letter::Sigma, Letter::Z(k)]);
        let s = t2 - t1;
        if s > 0 {
            (1..s).rev().for_each(&mut swap);
        } else {
            (s..=-2).for_each(&mut swap);
            // (0, -1) -> (1, 0) -> (0, 1)
            steps.extend([Letter::Z(1), Letter::Sigma]);
        }
        let q = FreeProductElement::from_letters(steps.into_iter().rev());
        debug_assert_eq!((q.act(t1), q.act(t2)), (0, 1));
        Ok(q)
    }
}

impl Group for ZStarZ2 {
    type Element = FreeProductElement;

    fn name(&self) -> String {
        "zstarz2".into()
    }

    fn identity(&self) -> FreeProductElement {
        FreeProductElement::default()
    }

    fn mul(&self, a: &FreeProductElement, b: &FreeProductElement) -> FreeProductElement {
        a.mul(b)
    }

    fn inv(&self, a: &FreeProductElement) -> FreeProductElement {
        a.inv()
    }

    fn generators(&self) -> &GeneratingSet<FreeProductElement> {
        &self.gens
    }
}

impl PointAction for ZStarZ2 {
    fn act_point(&self, q: &FreeProductElement, x: i64) -> i64 {
        q.act(x)
    }
}

impl TwoTransitive for ZStarZ2 {
    /// Shortest witness for points within [`GEODESIC_WITNESS_RANGE`] of the
    /// origin, [`ZStarZ2::constructive_witness`] beyond.
    fn two_transitive_witness(&self, t1: i64, t2: i64) -> Result<FreeProductElement, ZooError> {
        if t1.abs().max(t2.abs()) <= GEODESIC_WITNESS_RANGE {
            self.two_transitive_witness_with_budget(t1, t2, WITNESS_STATE_BUDGET)
        } else {
            self.constructive_witness(t1, t2)
        }
    }
}
