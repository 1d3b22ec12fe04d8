//! The integer Heisenberg group.
//!
//! Elements are triples `(x, y, z)` with
//! `(x,y,z)(x',y',z') = (x+x', y+y', z+z'+x·y')`. The generators are
//! `X = (1,0,0)` and `Y = (0,1,0)`; the commutator `XYX⁻¹Y⁻¹ = (0,0,1)`
//! generates the center.

use std::fmt;
use std::str::FromStr;

use crate::group::{GeneratingSet, Group, GroupError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HeisenbergElement {
    pub x: i64,
    pub y: i64,
    pub z: i64,
}

impl HeisenbergElement {
    pub const fn new(x: i64, y: i64, z: i64) -> Self {
        HeisenbergElement { x, y, z }
    }

    pub fn is_central(&self) -> bool {
        self.x == 0 && self.y == 0
    }
}

impl fmt::Display for HeisenbergElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.x, self.y, self.z)
    }
}

impl FromStr for HeisenbergElement {
    type Err = GroupError;
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let err = |reason: &str| GroupError::Parse {
            input: s.to_string(),
            reason: reason.to_string(),
        };
        let parts = s
            .split(',')
            .map(|c| c.trim().parse::<i64>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|e| err(&e.to_string()))?;
        match parts[..] {
            [x, y, z] => Ok(HeisenbergElement::new(x, y, z)),
            _ => Err(err("expected three integers x,y,z")),
        }
    }
}

#[derive(Debug, Clone)]
pub struct Heisenberg {
    gens: GeneratingSet<HeisenbergElement>,
}

impl Default for Heisenberg {
    fn default() -> Self {
        Self::new()
    }
}

impl Heisenberg {
    pub const X: HeisenbergElement = HeisenbergElement::new(1, 0, 0);
    pub const Y: HeisenbergElement = HeisenbergElement::new(0, 1, 0);
    pub const Z: HeisenbergElement = HeisenbergElement::new(0, 0, 1);

    pub fn new() -> Self {
        let id = HeisenbergElement::new(0, 0, 0);
        let gens = GeneratingSet::symmetrize(vec![("X".into(), Self::X), ("Y".into(), Self::Y)], &id, heisenberg_inv);
        Heisenberg { gens }
    }
}

fn heisenberg_inv(g: &HeisenbergElement) -> HeisenbergElement {
    HeisenbergElement::new(-g.x, -g.y, g.x * g.y - g.z)
}

impl Group for Heisenberg {
    type Element = HeisenbergElement;

    fn name(&self) -> String {
        "heisenberg".into()
    }

    fn identity(&self) -> HeisenbergElement {
        HeisenbergElement::new(0, 0, 0)
    }

    fn mul(&self, a: &HeisenbergElement, b: &HeisenbergElement) -> HeisenbergElement {
        HeisenbergElement::new(a.x + b.x, a.y + b.y, a.z + b.z + a.x * b.y)
    }

    fn inv(&self, a: &HeisenbergElement) -> HeisenbergElement {
        heisenberg_inv(a)
    }

    fn generators(&self) -> &GeneratingSet<HeisenbergElement> {
        &self.gens
    }
}
