//! Split extensions `Z^n ⋊_φ Z` for `φ ∈ GL(n, Z)`.
//!
//! `(m₁,h₁)(m₂,h₂) = (m₁ + φ^{h₁} m₂, h₁+h₂)`. Generators are the basis vectors
//! `m1, ..., mn` of the module `M = Z^n` and the acting generator `t = (0,1)`.

use std::fmt;
use std::str::FromStr;

use super::ZooError;
use crate::group::{GeneratingSet, Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SplitElement {
    pub m: Vec<i64>,
    pub h: i64,
}

impl SplitElement {
    pub fn new(m: Vec<i64>, h: i64) -> Self {
        SplitElement { m, h }
    }
}

impl fmt::Display for SplitElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let m: Vec<String> = self.m.iter().map(i64::to_string).collect();
        write!(f, "m:{};h:{}", m.join(","), self.h)
    }
}

impl FromStr for SplitElement {
    type Err = GroupError;
    /// `m:1,0;h:2`.
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let mut m = None;
        let mut h = 0;
        for section in s.split(';').map(str::trim).filter(|t| !t.is_empty()) {
            match section.split_once(':') {
                Some(("m", v)) => {
                    m = Some(
                        v.split(',')
                            .map(|c| c.trim().parse::<i64>())
                            .collect::<Result<Vec<_>, _>>()
                            .map_err(|_| err("bad module coordinates"))?,
                    )
                }
                Some(("h", v)) => h = v.trim().parse().map_err(|_| err("bad exponent"))?,
                _ => return Err(err("expected `m:` and `h:` sections")),
            }
        }
        Ok(SplitElement::new(m.ok_or_else(|| err("missing `m:` section"))?, h))
    }
}

type Matrix = Vec<Vec<i64>>;

fn determinant(a: &Matrix) -> i64 {
    let n = a.len();
    if n == 1 {
        return a[0][0];
    }
    (0..n)
        .map(|j| {
            let sign = if j % 2 == 0 { 1 } else { -1 };
            sign * a[0][j] * determinant(&minor(a, 0, j))
        })
        .sum()
}

fn minor(a: &Matrix, row: usize, col: usize) -> Matrix {
    a.iter()
        .enumerate()
        .filter(|(i, _)| *i != row)
        .map(|(_, r)| {
            r.iter()
                .enumerate()
                .filter(|(j, _)| *j != col)
                .map(|(_, x)| *x)
                .collect()
        })
        .collect()
}

/// Inverse of a unimodular matrix via the adjugate.
fn unimodular_inverse(a: &Matrix) -> Option<Matrix> {
    let n = a.len();
    let det = determinant(a);
    if det.abs() != 1 {
        return None;
    }
    if n == 1 {
        return Some(vec![vec![det]]);
    }
    let mut inv = vec![vec![0; n]; n];
    for (i, row) in inv.iter_mut().enumerate() {
        for (j, x) in row.iter_mut().enumerate() {
            let sign = if (i + j) % 2 == 0 { 1 } else { -1 };
            *x = sign * determinant(&minor(a, j, i)) * det;
        }
    }
    Some(inv)
}

fn apply(a: &Matrix, v: &[i64]) -> Vec<i64> {
    a.iter()
        .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
        .collect()
}

#[derive(Debug, Clone)]
pub struct SplitExtension {
    matrix: Matrix,
    inverse: Matrix,
    gens: GeneratingSet<SplitElement>,
}

impl SplitExtension {
    pub fn new(matrix: Matrix) -> Result<Self, ZooError> {
        let n = matrix.len();
        if n == 0 || matrix.iter().any(|r| r.len() != n) {
            return Err(ZooError::Parameters("matrix must be square and non-empty".into()));
        }
        let inverse = unimodular_inverse(&matrix)
            .ok_or_else(|| ZooError::Parameters("matrix must have determinant ±1".into()))?;
        let id = SplitElement::new(vec![0; n], 0);
        let mut labelled: Vec<(String, SplitElement)> = (0..n)
            .map(|i| {
                let mut m = vec![0; n];
                m[i] = 1;
                (format!("m{}", i + 1), SplitElement::new(m, 0))
            })
            .collect();
        labelled.push(("t".into(), SplitElement::new(vec![0; n], 1)));
        let mut ext = SplitExtension {
            matrix,
            inverse,
            gens: GeneratingSet::symmetrize(vec![], &id, |g| g.clone()),
        };
        ext.gens = GeneratingSet::symmetrize(labelled, &id, |g| ext.inv(g));
        Ok(ext)
    }

    /// Parses the registry form `split:2,1;1,1` (rows separated by `;`).
    pub fn from_key(key: &str) -> Result<Self, ZooError> {
        let body = key
            .strip_prefix("split:")
            .ok_or_else(|| ZooError::Parameters(format!("not a split key: {key}")))?;
        let matrix = body
            .split(';')
            .map(|row| {
                row.split(',')
                    .map(|x| x.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Matrix, _>>()
            .map_err(|e| ZooError::Parameters(e.to_string()))?;
        Self::new(matrix)
    }

    pub fn rank(&self) -> usize {
        self.matrix.len()
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    /// `φ^h m`.
    pub fn act(&self, h: i64, m: &[i64]) -> Vec<i64> {
        let a = if h >= 0 { &self.matrix } else { &self.inverse };
        (0..h.unsigned_abs()).fold(m.to_vec(), |v, _| apply(a, &v))
    }

    pub fn module_element(&self, m: Vec<i64>) -> SplitElement {
        SplitElement::new(m, 0)
    }

    pub fn t(&self) -> SplitElement {
        SplitElement::new(vec![0; self.rank()], 1)
    }
}

impl Group for SplitExtension {
    type Element = SplitElement;

    fn name(&self) -> String {
        let rows: Vec<String> = self
            .matrix
            .iter()
            .map(|r| r.iter().map(i64::to_string).collect::<Vec<_>>().join(","))
            .collect();
        format!("split:{}", rows.join(";"))
    }

    fn identity(&self) -> SplitElement {
        SplitElement::new(vec![0; self.rank()], 0)
    }

    fn mul(&self, a: &SplitElement, b: &SplitElement) -> SplitElement {
        let moved = self.act(a.h, &b.m);
        SplitElement::new(a.m.iter().zip(moved).map(|(x, y)| x + y).collect(), a.h + b.h)
    }

    fn inv(&self, a: &SplitElement) -> SplitElement {
        SplitElement::new(self.act(-a.h, &a.m).iter().map(|x| -x).collect(), -a.h)
    }

    fn generators(&self) -> &GeneratingSet<SplitElement> {
        &self.gens
    }

    fn contains(&self, g: &SplitElement) -> bool {
        g.m.len() == self.rank()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cat_map_law() {
        let g = SplitExtension::from_key("split:2,1;1,1").unwrap();
        assert_eq!(g.name(), "split:2,1;1,1");
        let t = g.t();
        let e1 = g.module_element(vec![1, 0]);
        assert_eq!(g.conjugate(&t, &e1), g.module_element(vec![2, 1]));
        assert_eq!(g.conjugate(&g.inv(&t), &e1), g.module_element(vec![1, -1]));
        let x = SplitElement::new(vec![3, -2], 4);
        assert_eq!(g.mul(&x, &g.inv(&x)), g.identity());
    }

    #[test]
    fn rejects_non_unimodular() {
        assert!(SplitExtension::new(vec![vec![2, 0], vec![0, 1]]).is_err());
        assert!(SplitExtension::from_key("split:1,2").is_err());
        assert!(SplitExtension::from_key("split:1").is_ok());
    }

    #[test]
    fn generators() {
        let g = SplitExtension::from_key("split:2,1;1,1").unwrap();
        let labels: Vec<&str> = g.generators().iter().map(|(l, _)| l).collect();
        assert_eq!(labels, ["m1", "m1^-1", "m2", "m2^-1", "t", "t^-1"]);
    }

    #[test]
    fn parse_display_roundtrip() {
        let g: SplitElement = "m:1,-2;h:3".parse().unwrap();
        assert_eq!(g.to_string(), "m:1,-2;h:3");
        assert!("h:3".parse::<SplitElement>().is_err());
    }
}
