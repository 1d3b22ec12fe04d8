//! Congruence quotients for the groups in the zoo.

use std::ops::RangeInclusive;

use super::{FiniteQuotient, Image};
use crate::zoo::{
    BsElement, CounterexampleElement, HeisenbergElement, LamplighterElement, SplitElement, SplitExtension, ZnElement,
};

fn md(x: i64, k: u64) -> i64 {
    x.rem_euclid(k as i64)
}

/// `Z^n → (Z/k)^n`.
#[derive(Debug, Clone)]
pub struct ZnModK {
    rank: usize,
    k: u64,
}

impl ZnModK {
    pub fn new(rank: usize, k: u64) -> Self {
        assert!(k >= 1);
        ZnModK { rank, k }
    }
}

impl FiniteQuotient<ZnElement> for ZnModK {
    fn description(&self) -> String {
        format!("coordinates mod {}", self.k)
    }
    fn modulus(&self) -> u64 {
        self.k
    }
    fn order(&self) -> u64 {
        self.k.pow(self.rank as u32)
    }
    fn apply(&self, g: &ZnElement) -> Image {
        g.coords().iter().map(|&x| md(x, self.k)).collect()
    }
    fn mul(&self, a: &Image, b: &Image) -> Image {
        a.iter().zip(b).map(|(x, y)| md(x + y, self.k)).collect()
    }
    fn inv(&self, a: &Image) -> Image {
        a.iter().map(|x| md(-x, self.k)).collect()
    }
    fn identity(&self) -> Image {
        vec![0; self.rank]
    }
}

pub fn zn_family(rank: usize, ks: RangeInclusive<u64>) -> Vec<Box<dyn FiniteQuotient<ZnElement>>> {
    ks.map(|k| Box::new(ZnModK::new(rank, k)) as Box<dyn FiniteQuotient<ZnElement>>)
        .collect()
}

/// The Heisenberg group with entries mod `k`.
#[derive(Debug, Clone)]
pub struct HeisenbergModK {
    k: u64,
}

impl HeisenbergModK {
    pub fn new(k: u64) -> Self {
        assert!(k >= 1);
        HeisenbergModK { k }
    }
}

impl FiniteQuotient<HeisenbergElement> for HeisenbergModK {
    fn description(&self) -> String {
        format!("entries mod {}", self.k)
    }
    fn modulus(&self) -> u64 {
        self.k
    }
    fn order(&self) -> u64 {
        self.k.pow(3)
    }
    fn apply(&self, g: &HeisenbergElement) -> Image {
        vec![md(g.x, self.k), md(g.y, self.k), md(g.z, self.k)]
    }
    fn mul(&self, a: &Image, b: &Image) -> Image {
        vec![
            md(a[0] + b[0], self.k),
            md(a[1] + b[1], self.k),
            md(a[2] + b[2] + a[0] * b[1], self.k),
        ]
    }
    fn inv(&self, a: &Image) -> Image {
        vec![md(-a[0], self.k), md(-a[1], self.k), md(a[0] * a[1] - a[2], self.k)]
    }
    fn identity(&self) -> Image {
        vec![0; 3]
    }
}

pub fn heisenberg_family(ks: RangeInclusive<u64>) -> Vec<Box<dyn FiniteQuotient<HeisenbergElement>>> {
    ks.map(|k| Box::new(HeisenbergModK::new(k)) as Box<dyn FiniteQuotient<HeisenbergElement>>)
        .collect()
}

/// `Z≀Z → (Z/n)≀(Z/m)`: lamp values mod `n`, positions and shift mod `m`.
/// Images are `[shift, lamp_0, …, lamp_{m-1}]`.
#[derive(Debug, Clone)]
pub struct LamplighterQuotient {
    n: u64,
    m: u64,
}

impl LamplighterQuotient {
    pub fn new(n: u64, m: u64) -> Self {
        assert!(n >= 1 && m >= 1);
        LamplighterQuotient { n, m }
    }

    fn image(&self, g: &LamplighterElement) -> Image {
        let mut out = vec![0; self.m as usize + 1];
        out[0] = md(g.shift, self.m);
        for (i, v) in g.lamps.iter() {
            let slot = 1 + md(*i, self.m) as usize;
            out[slot] = md(out[slot] + v, self.n);
        }
        out
    }
}

impl FiniteQuotient<LamplighterElement> for LamplighterQuotient {
    fn description(&self) -> String {
        format!("lamps mod {} on Z/{}", self.n, self.m)
    }
    fn modulus(&self) -> u64 {
        self.n
    }
    fn order(&self) -> u64 {
        self.n.pow(self.m as u32) * self.m
    }
    fn apply(&self, g: &LamplighterElement) -> Image {
        self.image(g)
    }
    fn mul(&self, a: &Image, b: &Image) -> Image {
        let m = self.m as usize;
        let s = a[0] as usize;
        let mut out = a.clone();
        out[0] = md(a[0] + b[0], self.m);
        for i in 0..m {
            let j = (i + s) % m;
            out[1 + j] = md(out[1 + j] + b[1 + i], self.n);
        }
        out
    }
    fn inv(&self, a: &Image) -> Image {
        // (f, s)⁻¹ = (-τ_{-s} f, -s)
        let m = self.m as usize;
        let s = a[0] as usize;
        let mut out = vec![0; m + 1];
        out[0] = md(-a[0], self.m);
        for i in 0..m {
            out[1 + (i + m - s) % m] = md(-a[1 + i], self.n);
        }
        out
    }
    fn identity(&self) -> Image {
        vec![0; self.m as usize + 1]
    }
}

/// `G = W ⋊ Q → Q → (Z/n)≀(Z/m)`. Every finite quotient of `G` kills the
/// divisible group `W`, so this is no loss.
#[derive(Debug, Clone)]
pub struct CounterexampleQuotient(LamplighterQuotient);

impl CounterexampleQuotient {
    pub fn new(n: u64, m: u64) -> Self {
        CounterexampleQuotient(LamplighterQuotient::new(n, m))
    }
}

impl FiniteQuotient<CounterexampleElement> for CounterexampleQuotient {
    fn description(&self) -> String {
        format!("W killed, {}", self.0.description())
    }
    fn modulus(&self) -> u64 {
        self.0.modulus()
    }
    fn order(&self) -> u64 {
        self.0.order()
    }
    fn apply(&self, g: &CounterexampleElement) -> Image {
        self.0.image(&g.q)
    }
    fn mul(&self, a: &Image, b: &Image) -> Image {
        self.0.mul(a, b)
    }
    fn inv(&self, a: &Image) -> Image {
        self.0.inv(a)
    }
    fn identity(&self) -> Image {
        self.0.identity()
    }
}

pub fn counterexample_family(
    ns: RangeInclusive<u64>,
    ms: RangeInclusive<u64>,
) -> Vec<Box<dyn FiniteQuotient<CounterexampleElement>>> {
    let mut out: Vec<Box<dyn FiniteQuotient<CounterexampleElement>>> = Vec::new();
    for n in ns {
        for m in ms.clone() {
            out.push(Box::new(CounterexampleQuotient::new(n, m)));
        }
    }
    out
}

fn pow_mod(base: i64, mut e: u64, n: u64) -> i64 {
    let n = n as i128;
    let mut acc: i128 = 1 % n;
    let mut b = (base as i128).rem_euclid(n);
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % n;
        }
        b = b * b % n;
        e >>= 1;
    }
    acc as i64
}

/// `BS(1,2) → Z/n ⋊ Z/r` for odd `n`, with `r` the order of 2 mod `n`:
/// `(k, q) ↦ (k mod r, q mod n)`, where 2 is invertible mod `n`.
/// Images are `[k mod r, q mod n]`.
#[derive(Debug, Clone)]
pub struct BsOddQuotient {
    n: u64,
    r: u64,
}

impl BsOddQuotient {
    pub fn new(n: u64) -> Self {
        assert!(n % 2 == 1, "modulus must be odd");
        let mut r = 1;
        while pow_mod(2, r, n) != 1 % n as i64 {
            r += 1;
        }
        BsOddQuotient { n, r }
    }
}

impl FiniteQuotient<BsElement> for BsOddQuotient {
    fn description(&self) -> String {
        format!("translation mod {}, exponent mod {}", self.n, self.r)
    }
    fn modulus(&self) -> u64 {
        self.n
    }
    fn order(&self) -> u64 {
        self.n * self.r
    }
    fn apply(&self, g: &BsElement) -> Image {
        let num = g.q.numerator().rem_euclid(self.n as i128) as i64;
        // 2^{-e} = 2^{r - e mod r}
        let e = g.q.exponent() as u64 % self.r;
        let scale = pow_mod(2, (self.r - e) % self.r, self.n);
        vec![md(g.k, self.r), md(num * scale, self.n)]
    }
    fn mul(&self, a: &Image, b: &Image) -> Image {
        let scale = pow_mod(2, a[0] as u64, self.n);
        vec![md(a[0] + b[0], self.r), md(a[1] + scale * b[1], self.n)]
    }
    fn inv(&self, a: &Image) -> Image {
        let k = md(-a[0], self.r);
        let scale = pow_mod(2, k as u64, self.n);
        vec![k, md(-scale * a[1], self.n)]
    }
    fn identity(&self) -> Image {
        vec![0, 0]
    }
}

pub fn bs_family(ns: impl IntoIterator<Item = u64>) -> Vec<Box<dyn FiniteQuotient<BsElement>>> {
    ns.into_iter()
        .filter(|n| n % 2 == 1)
        .map(|n| Box::new(BsOddQuotient::new(n)) as Box<dyn FiniteQuotient<BsElement>>)
        .collect()
}

/// `Z^n ⋊_φ Z → (Z/k)^n ⋊ Z/r` with `r` the order of `φ` mod `k`.
/// Images are `[m_1, …, m_n, h]`.
#[derive(Debug, Clone)]
pub struct SplitModK {
    matrix: Vec<Vec<i64>>,
    k: u64,
    r: u64,
}

impl SplitModK {
    pub fn new(group: &SplitExtension, k: u64) -> Self {
        assert!(k >= 1);
        let n = group.rank();
        let reduce = |a: &Vec<Vec<i64>>| -> Vec<Vec<i64>> {
            a.iter().map(|row| row.iter().map(|&x| md(x, k)).collect()).collect()
        };
        let matrix = reduce(group.matrix());
        let identity: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| md(i64::from(i == j), k)).collect())
            .collect();
        let mut power = matrix.clone();
        let mut r = 1;
        while power != identity {
            power = reduce(
                &(0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| (0..n).map(|l| power[i][l] * matrix[l][j]).sum())
                            .collect()
                    })
                    .collect(),
            );
            r += 1;
        }
        SplitModK { matrix, k, r }
    }

    fn act(&self, h: i64, m: &[i64]) -> Vec<i64> {
        let mut v = m.to_vec();
        for _ in 0..md(h, self.r) {
            v = self
                .matrix
                .iter()
                .map(|row| md(row.iter().zip(&v).map(|(a, b)| a * b).sum(), self.k))
                .collect();
        }
        v
    }
}

impl FiniteQuotient<SplitElement> for SplitModK {
    fn description(&self) -> String {
        format!("M mod {}, acting part mod {}", self.k, self.r)
    }
    fn modulus(&self) -> u64 {
        self.k
    }
    fn order(&self) -> u64 {
        self.k.pow(self.matrix.len() as u32) * self.r
    }
    fn apply(&self, g: &SplitElement) -> Image {
        let mut out: Image = g.m.iter().map(|&x| md(x, self.k)).collect();
        out.push(md(g.h, self.r));
        out
    }
    fn mul(&self, a: &Image, b: &Image) -> Image {
        let n = self.matrix.len();
        let moved = self.act(a[n], &b[..n]);
        let mut out: Image = a[..n].iter().zip(moved).map(|(x, y)| md(x + y, self.k)).collect();
        out.push(md(a[n] + b[n], self.r));
        out
    }
    fn inv(&self, a: &Image) -> Image {
        let n = self.matrix.len();
        let h = md(-a[n], self.r);
        let mut out: Image = self.act(h, &a[..n]).iter().map(|x| md(-x, self.k)).collect();
        out.push(h);
        out
    }
    fn identity(&self) -> Image {
        vec![0; self.matrix.len() + 1]
    }
}

pub fn split_family(group: &SplitExtension, ks: RangeInclusive<u64>) -> Vec<Box<dyn FiniteQuotient<SplitElement>>> {
    ks.map(|k| Box::new(SplitModK::new(group, k)) as Box<dyn FiniteQuotient<SplitElement>>)
        .collect()
}
