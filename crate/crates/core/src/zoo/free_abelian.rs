//! Free abelian groups `Z^n` with the standard basis as generators.

use std::fmt;
use std::str::FromStr;

use crate::group::{GeneratingSet, Group, GroupError};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ZnElement(pub Vec<i64>);

impl ZnElement {
    pub fn coords(&self) -> &[i64] {
        &self.0
    }
}

impl fmt::Display for ZnElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

impl FromStr for ZnElement {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, GroupError> {
        s.split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map(ZnElement)
            .map_err(|e| GroupError::Parse {
                input: s.to_string(),
                reason: e.to_string(),
            })
    }
}

/// `Z^rank` with generators `e_1^±, ..., e_rank^±`.
#[derive(Debug, Clone)]
pub struct FreeAbelian {
    rank: usize,
    gens: GeneratingSet<ZnElement>,
}

impl FreeAbelian {
    pub fn new(rank: usize) -> Self {
        let id = ZnElement(vec![0; rank]);
        let basis = (0..rank)
            .map(|i| {
                let mut v = vec![0; rank];
                v[i] = 1;
                (format!("e{}", i + 1), ZnElement(v))
            })
            .collect();
        let gens = GeneratingSet::symmetrize(basis, &id, |g| ZnElement(g.0.iter().map(|x| -x).collect()));
        FreeAbelian { rank, gens }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn element(&self, coords: &[i64]) -> ZnElement {
        assert_eq!(coords.len(), self.rank, "coordinate count must equal the rank");
        ZnElement(coords.to_vec())
    }
}

impl Group for FreeAbelian {
    type Element = ZnElement;

    fn name(&self) -> String {
        format!("zn:{}", self.rank)
    }

    fn identity(&self) -> ZnElement {
        ZnElement(vec![0; self.rank])
    }

    fn mul(&self, a: &ZnElement, b: &ZnElement) -> ZnElement {
        assert!(
            self.contains(a) && self.contains(b),
            "element of a different rank passed to {}",
            self.name()
        );
        ZnElement(a.0.iter().zip(&b.0).map(|(x, y)| x + y).collect())
    }

    fn inv(&self, a: &ZnElement) -> ZnElement {
        ZnElement(a.0.iter().map(|x| -x).collect())
    }

    fn generators(&self) -> &GeneratingSet<ZnElement> {
        &self.gens
    }

    fn contains(&self, g: &ZnElement) -> bool {
        g.0.len() == self.rank
    }
}
