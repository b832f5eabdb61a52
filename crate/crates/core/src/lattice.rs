//! Colored lattice model: Boltzmann weights, boundary conditions, state
//! enumeration and partition functions.
//!
//! The grid has `n` rows (row `i` carries the spectral parameter `x_i`) and
//! columns labelled `N, N-1, ..., 0` from left to right. Colored paths enter
//! through the top boundary and leave through the left boundary, moving only
//! down and left. At every vertex the north and east labels are inputs and the
//! west and south labels are outputs.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::ddop::ReducedParams;
use crate::poly::Polynomial;
use crate::weyl::{Partition, Permutation};

pub const MAX_COLORS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("N = {big_n} is smaller than the largest part {mu1}")]
    NotEnoughColumns { big_n: usize, mu1: u32 },
    #[error("at most {MAX_COLORS} colors are supported, got {0}")]
    TooManyColors(usize),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("invalid boundary: {0}")]
    InvalidBoundary(String),
}

/// Horizontal edge label.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HLabel {
    Plus,
    Color(u8),
}

impl HLabel {
    pub fn color(self) -> Option<u8> {
        match self {
            HLabel::Plus => None,
            HLabel::Color(c) => Some(c),
        }
    }

    fn as_set(self) -> ColorSet {
        match self {
            HLabel::Plus => ColorSet::EMPTY,
            HLabel::Color(c) => ColorSet::singleton(c),
        }
    }
}

impl fmt::Display for HLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HLabel::Plus => write!(f, "+"),
            HLabel::Color(c) => write!(f, "{c}"),
        }
    }
}

impl Serialize for HLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// A subset of `{1, .., 64}` stored as a bit field (bit `c - 1` for color `c`).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u64);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    pub fn singleton(c: u8) -> Self {
        debug_assert!((1..=MAX_COLORS as u8).contains(&c));
        ColorSet(1u64 << (c - 1))
    }

    pub fn from_colors<I: IntoIterator<Item = u8>>(colors: I) -> Self {
        colors.into_iter().fold(Self::EMPTY, |s, c| s.with(c))
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, c: u8) -> bool {
        self.0 >> (c - 1) & 1 == 1
    }

    pub fn with(self, c: u8) -> Self {
        ColorSet(self.0 | 1u64 << (c - 1))
    }

    pub fn without(self, c: u8) -> Self {
        ColorSet(self.0 & !(1u64 << (c - 1)))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    /// `|Σ_{[c+1, n]}|`.
    pub fn count_above(self, c: u8) -> usize {
        if c as usize >= MAX_COLORS {
            0
        } else {
            (self.0 >> c).count_ones() as usize
        }
    }

    pub fn union(self, other: ColorSet) -> Self {
        ColorSet(self.0 | other.0)
    }

    pub fn intersects(self, other: ColorSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn iter(self) -> impl Iterator<Item = u8> {
        (1..=MAX_COLORS as u8).filter(move |&c| self.contains(c))
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

/// `h_k(α, β)` by `h_k = α h_{k-1} + β^k`, `h_0 = 1`.
pub fn h_poly(k: u32, n: usize) -> Polynomial {
    h_sequence(&Polynomial::alpha(n), &Polynomial::beta(n), k as usize)
        .pop()
        .unwrap()
}

/// `[h_0, .., h_k]` evaluated at the given α and β.
pub fn h_sequence(alpha: &Polynomial, beta: &Polynomial, k: usize) -> Vec<Polynomial> {
    let n = alpha.n();
    let mut out = vec![Polynomial::one(n)];
    let mut beta_pow = Polynomial::one(n);
    for _ in 0..k {
        beta_pow = &beta_pow * beta;
        let next = &(alpha * out.last().unwrap()) + &beta_pow;
        out.push(next);
    }
    out
}

/// Reduced parameter values in a fixed variable context, with the derived
/// quantities the weights are built from.
#[derive(Debug, Clone)]
struct ParamValues {
    n: usize,
    alpha: Polynomial,
    beta: Polynomial,
    gamma: Polynomial,
    h: Vec<Polynomial>,
}

impl ParamValues {
    fn new(params: &ReducedParams, n: usize, max_k: usize) -> Self {
        let (alpha, beta, gamma) = params.values(n);
        let h = h_sequence(&alpha, &beta, max_k);
        ParamValues {
            n,
            alpha,
            beta,
            gamma,
            h,
        }
    }

    /// `h_k` with `h_{-1} = 0`; `k < -1` is never requested.
    fn h(&self, k: i64) -> Polynomial {
        match k {
            -1 => Polynomial::zero(self.n),
            k if k >= 0 => self.h[k as usize].clone(),
            _ => unreachable!("h_{k} has no polynomial value"),
        }
    }

    fn plus_one(&self, coeff: &Polynomial, x: &Polynomial) -> Polynomial {
        &Polynomial::one(self.n) + &(coeff * x)
    }

    fn dagger(&self, k: usize, x: &Polynomial) -> Polynomial {
        if k == 0 {
            return Polynomial::one(self.n);
        }
        let k_i = k as i64;
        let ag = &self.alpha + &self.gamma;
        let bg = &self.beta + &self.gamma;
        let lead = &(&(&ag * &bg) * x) + &self.gamma;
        let body = &(&lead * &self.h(k_i - 1)) + &(&(&self.alpha * &self.beta) * &self.h(k_i - 2));
        sign(k + 1, body)
    }

    fn dagger_alt(&self, k: usize, x: &Polynomial) -> Polynomial {
        let bk = self.beta.pow(k as u32);
        let rest = if k == 0 {
            Polynomial::zero(self.n)
        } else {
            let ag = &self.alpha + &self.gamma;
            let bg = &self.beta + &self.gamma;
            &(&bg * &self.h(k as i64 - 1)) * &self.plus_one(&ag, x)
        };
        sign(k, &bk - &rest)
    }

    fn ddagger(&self, k: usize, m: usize) -> Polynomial {
        assert!(
            k >= 1 && m < k,
            "ddagger needs 1 <= k and m < k (k = {k}, m = {m})"
        );
        let nb = (-&self.beta).pow(m as u32);
        if k == 1 {
            return nb;
        }
        let k_i = k as i64;
        let body =
            &(&(&self.alpha * &self.beta) * &self.h(k_i - 3)) + &(&self.gamma * &self.h(k_i - 2));
        sign(k, &nb * &body)
    }

    fn ddagger_alt(&self, k: usize, m: usize) -> Polynomial {
        assert!(k >= 1 && m < k);
        let nb = (-&self.beta).pow(m as u32);
        let bg = &self.beta + &self.gamma;
        let rest = if k == 1 {
            Polynomial::zero(self.n)
        } else {
            &bg * &self.h(k as i64 - 2)
        };
        sign(k - 1, &nb * &(&self.beta.pow(k as u32 - 1) - &rest))
    }
}

fn sign(e: usize, p: Polynomial) -> Polynomial {
    if e.is_multiple_of(2) {
        p
    } else {
        -p
    }
}

/// (†) in its first form, symbolic parameters.
pub fn dagger(k: usize, x: &Polynomial) -> Polynomial {
    ParamValues::new(&ReducedParams::symbolic(), x.n(), k).dagger(k, x)
}

/// (†) in its second form, symbolic parameters.
pub fn dagger_alt(k: usize, x: &Polynomial) -> Polynomial {
    ParamValues::new(&ReducedParams::symbolic(), x.n(), k).dagger_alt(k, x)
}

/// (‡) in its first form, symbolic parameters, in context `n`.
pub fn ddagger(k: usize, m: usize, n: usize) -> Polynomial {
    ParamValues::new(&ReducedParams::symbolic(), n, k).ddagger(k, m)
}

/// (‡) in its second form.
pub fn ddagger_alt(k: usize, m: usize, n: usize) -> Polynomial {
    ParamValues::new(&ReducedParams::symbolic(), n, k).ddagger_alt(k, m)
}

/// The six vertex families.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum VertexFamily {
    Empty,
    PassThrough,
    TurnDown,
    Exit,
    ExchangeUp,
    ExchangeDown,
}

/// Cached Boltzmann weights for a fixed parameter specialization, number of
/// colors, and list of row variables.
#[derive(Debug, Clone)]
pub struct BoltzmannWeights {
    n_colors: usize,
    ctx_n: usize,
    rows: Vec<Polynomial>,
    empty: Vec<Vec<Polynomial>>,
    through_in: Vec<Vec<Polynomial>>,
    through_out: Vec<Vec<Polynomial>>,
    turn: Vec<Vec<Polynomial>>,
    exit: Vec<Vec<Polynomial>>,
    up: Vec<Vec<Vec<Polynomial>>>,
    down: Vec<Vec<Vec<Polynomial>>>,
}

impl BoltzmannWeights {
    /// Weights for an `n`-row lattice: `n` colors, row `i` uses `x_i`.
    pub fn for_lattice(params: &ReducedParams, n: usize) -> Self {
        let rows = (1..=n).map(|i| Polynomial::x(n, i)).collect();
        Self::new(params, n, rows).expect("n-row lattice weights")
    }

    /// Weights with an explicit list of row variables (all in one context).
    pub fn new(
        params: &ReducedParams,
        n_colors: usize,
        rows: Vec<Polynomial>,
    ) -> Result<Self, LatticeError> {
        if n_colors > MAX_COLORS {
            return Err(LatticeError::TooManyColors(n_colors));
        }
        let ctx_n = rows
            .first()
            .map(Polynomial::n)
            .ok_or_else(|| LatticeError::SizeMismatch("no row variables".into()))?;
        let v = ParamValues::new(params, ctx_n, n_colors + 1);
        let nc = n_colors;
        let neg_a: Vec<Polynomial> = (0..=nc).map(|m| (-&v.alpha).pow(m as u32)).collect();
        let neg_b: Vec<Polynomial> = (0..=nc).map(|m| (-&v.beta).pow(m as u32)).collect();
        let ab = &v.alpha * &v.beta;
        let ab_pow: Vec<Polynomial> = (0..=nc).map(|m| ab.pow(m as u32)).collect();
        let ag = &v.alpha + &v.gamma;
        let bg = &v.beta + &v.gamma;
        let abg = &ag + &v.beta;

        let mut w = BoltzmannWeights {
            n_colors,
            ctx_n,
            rows: rows.clone(),
            empty: Vec::new(),
            through_in: Vec::new(),
            through_out: Vec::new(),
            turn: Vec::new(),
            exit: Vec::new(),
            up: Vec::new(),
            down: Vec::new(),
        };
        for x in &rows {
            let pa = v.plus_one(&ag, x);
            let pb = v.plus_one(&bg, x);
            let pab = &pa * &pb;
            let pabg = v.plus_one(&abg, x);
            w.empty.push((0..=nc).map(|k| v.dagger(k, x)).collect());
            w.through_in
                .push(ab_pow.iter().map(|p| &pabg * p).collect());
            w.through_out.push(ab_pow.iter().map(|p| x * p).collect());
            w.turn.push(neg_a.iter().map(|p| &pab * p).collect());
            w.up.push(
                neg_a
                    .iter()
                    .map(|a| neg_b.iter().map(|b| &(a * b) * &pa).collect())
                    .collect(),
            );
            w.down.push(
                neg_a
                    .iter()
                    .map(|a| neg_b.iter().map(|b| &(a * b) * &pb).collect())
                    .collect(),
            );
        }
        w.exit = (0..=nc)
            .map(|k| {
                (0..k.max(1))
                    .map(|m| {
                        if k == 0 {
                            Polynomial::zero(ctx_n)
                        } else {
                            v.ddagger(k, m)
                        }
                    })
                    .collect()
            })
            .collect();
        Ok(w)
    }

    pub fn n_colors(&self) -> usize {
        self.n_colors
    }

    pub fn context_n(&self) -> usize {
        self.ctx_n
    }

    pub fn rows(&self) -> usize {
        self.rows.len()
    }

    /// Weight of the vertex `(west, north, east)` in `row` (0-based), with
    /// the forced south label, or `None` if the configuration is not one of
    /// the six families.
    pub fn vertex(
        &self,
        west: HLabel,
        north: ColorSet,
        east: HLabel,
        row: usize,
    ) -> Option<(ColorSet, &Polynomial)> {
        self.vertex_with_family(west, north, east, row)
            .map(|(s, p, _)| (s, p))
    }

    pub fn vertex_with_family(
        &self,
        west: HLabel,
        north: ColorSet,
        east: HLabel,
        row: usize,
    ) -> Option<(ColorSet, &Polynomial, VertexFamily)> {
        let sigma = north;
        let out = match (west, east) {
            (HLabel::Plus, HLabel::Plus) => {
                (sigma, &self.empty[row][sigma.len()], VertexFamily::Empty)
            }
            (HLabel::Color(c), HLabel::Color(e)) if c == e => {
                let m = sigma.count_above(c);
                let p = if sigma.contains(c) {
                    &self.through_in[row][m]
                } else {
                    &self.through_out[row][m]
                };
                (sigma, p, VertexFamily::PassThrough)
            }
            (HLabel::Plus, HLabel::Color(c)) => {
                if sigma.contains(c) {
                    return None;
                }
                (
                    sigma.with(c),
                    &self.turn[row][sigma.count_above(c)],
                    VertexFamily::TurnDown,
                )
            }
            (HLabel::Color(c), HLabel::Plus) => {
                if !sigma.contains(c) {
                    return None;
                }
                (
                    sigma.without(c),
                    &self.exit[sigma.len()][sigma.count_above(c)],
                    VertexFamily::Exit,
                )
            }
            (HLabel::Color(west_c), HLabel::Color(east_c)) => {
                if !sigma.contains(west_c) || sigma.contains(east_c) {
                    return None;
                }
                let south = sigma.with(east_c).without(west_c);
                if west_c < east_c {
                    let (c, d) = (west_c, east_c);
                    let p = &self.up[row][sigma.count_above(d)][sigma.count_above(c)];
                    (south, p, VertexFamily::ExchangeUp)
                } else {
                    let (c, d) = (east_c, west_c);
                    let p = &self.down[row][south.count_above(c)][sigma.count_above(d)];
                    (south, p, VertexFamily::ExchangeDown)
                }
            }
        };
        debug_assert_eq!(
            west.as_set().union(out.0),
            east.as_set().union(north),
            "color conservation"
        );
        Some(out)
    }

    /// Every `(west, south, weight)` with nonzero weight compatible with the
    /// given north and east labels.
    pub fn west_options(
        &self,
        north: ColorSet,
        east: HLabel,
        row: usize,
    ) -> Vec<(HLabel, ColorSet, &Polynomial)> {
        let mut out = Vec::with_capacity(north.len() + 2);
        let mut push = |west: HLabel| {
            if let Some((south, p)) = self.vertex(west, north, east, row) {
                if !p.is_zero() {
                    out.push((west, south, p));
                }
            }
        };
        match east {
            HLabel::Plus => {
                push(HLabel::Plus);
                for c in north.iter() {
                    push(HLabel::Color(c));
                }
            }
            HLabel::Color(e) => {
                push(east);
                if !north.contains(e) {
                    push(HLabel::Plus);
                    for c in north.iter() {
                        push(HLabel::Color(c));
                    }
                }
            }
        }
        out
    }
}

/// Weight of a single vertex with symbolic parameters, `n` colors and row
/// variable `x_row` (1-based).
pub fn vertex_weight(
    n: usize,
    west: HLabel,
    north: ColorSet,
    east: HLabel,
    row: usize,
) -> Option<(ColorSet, Polynomial)> {
    let weights =
        BoltzmannWeights::new(&ReducedParams::symbolic(), n, vec![Polynomial::x(n, row)]).ok()?;
    weights
        .vertex(west, north, east, 0)
        .map(|(s, p)| (s, p.clone()))
}

/// Boundary data of an `n`-row grid with columns `N..0`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeBoundary {
    n: usize,
    big_n: usize,
    /// Left boundary label of each row, top to bottom.
    left: Vec<HLabel>,
    /// Top boundary set of each column, indexed by column label `j`.
    top: Vec<ColorSet>,
}

impl LatticeBoundary {
    pub fn new(
        n: usize,
        big_n: usize,
        left: Vec<HLabel>,
        top: Vec<ColorSet>,
    ) -> Result<Self, LatticeError> {
        if n > MAX_COLORS {
            return Err(LatticeError::TooManyColors(n));
        }
        if left.len() != n || top.len() != big_n + 1 {
            return Err(LatticeError::SizeMismatch(format!(
                "expected {n} left labels and {} top sets",
                big_n + 1
            )));
        }
        let all = if n == MAX_COLORS {
            u64::MAX
        } else {
            (1u64 << n) - 1
        };
        let mut seen = 0u64;
        for l in &left {
            match l {
                HLabel::Color(c) if (1..=n as u8).contains(c) && !ColorSet(seen).contains(*c) => {
                    seen |= ColorSet::singleton(*c).0
                }
                _ => {
                    return Err(LatticeError::InvalidBoundary(
                        "left labels must be a permutation of the colors".into(),
                    ))
                }
            }
        }
        let mut union = 0u64;
        for t in &top {
            if t.0 & union != 0 || t.0 & !all != 0 {
                return Err(LatticeError::InvalidBoundary(
                    "each color must enter exactly once through the top".into(),
                ));
            }
            union |= t.0;
        }
        if union != all {
            return Err(LatticeError::InvalidBoundary(
                "some color never enters".into(),
            ));
        }
        Ok(LatticeBoundary {
            n,
            big_n,
            left,
            top,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn big_n(&self) -> usize {
        self.big_n
    }

    pub fn left(&self) -> &[HLabel] {
        &self.left
    }

    /// Top boundary set of column `j`.
    pub fn top(&self, j: usize) -> ColorSet {
        self.top[j]
    }

    /// Top boundary sets in drawing order (column `N` first).
    pub fn top_positions(&self) -> Vec<ColorSet> {
        self.top.iter().rev().copied().collect()
    }

    /// 0-based row in which each color (index `c`) leaves the grid.
    fn exit_rows(&self) -> Vec<usize> {
        let mut rows = vec![0; self.n + 1];
        for (r, l) in self.left.iter().enumerate() {
            rows[l.color().unwrap() as usize] = r;
        }
        rows
    }
}

/// Left label of row `i` is `n + 1 - w1^{-1}(i)`; the top edge of column `j`
/// carries `{ n + 1 - w2^{-1}(i) : μ_i = j }`.
pub fn boundary_from(
    w1: &Permutation,
    w2: &Permutation,
    mu: &Partition,
    big_n: usize,
) -> Result<LatticeBoundary, LatticeError> {
    let n = w1.n();
    if w2.n() != n || mu.len() != n {
        return Err(LatticeError::SizeMismatch(format!(
            "w1, w2 and mu must have {n} entries"
        )));
    }
    if (mu.first() as usize) > big_n {
        return Err(LatticeError::NotEnoughColumns {
            big_n,
            mu1: mu.first(),
        });
    }
    if n > MAX_COLORS {
        return Err(LatticeError::TooManyColors(n));
    }
    let w1_inv = w1.inverse();
    let w2_inv = w2.inverse();
    let left = (1..=n)
        .map(|i| HLabel::Color((n + 1 - w1_inv.apply(i)) as u8))
        .collect();
    let mut top = vec![ColorSet::EMPTY; big_n + 1];
    for i in 1..=n {
        let j = mu.parts()[i - 1] as usize;
        top[j] = top[j].with((n + 1 - w2_inv.apply(i)) as u8);
    }
    LatticeBoundary::new(n, big_n, left, top)
}

/// `w1 = w`, `w2 = w0`, `μ = λ + ρ` and `N = λ_1 + n - 1`.
pub fn system_for_kn(w: &Permutation, lambda: &Partition) -> Result<LatticeBoundary, LatticeError> {
    let n = w.n();
    if lambda.len() != n {
        return Err(LatticeError::SizeMismatch(format!(
            "lambda must have {n} parts"
        )));
    }
    let mu = lambda.plus(&Partition::staircase(n));
    boundary_from(
        w,
        &Permutation::longest(n),
        &mu,
        lambda.first() as usize + n - 1,
    )
}

/// A complete edge labelling with nonzero weight.
///
/// `horizontal[r][k]` is the edge of row `r` left of drawing position `k`
/// (position `k` is column `N - k`; `k = N + 1` is the right boundary).
/// `vertical[r][k]` is the edge above row `r` in position `k` (`r = n` is the
/// bottom boundary).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LatticeState {
    pub horizontal: Vec<Vec<HLabel>>,
    pub vertical: Vec<Vec<ColorSet>>,
    pub weight: Polynomial,
}

impl LatticeState {
    /// Per-vertex weights and families recomputed from the labels.
    pub fn vertex_weights(
        &self,
        weights: &BoltzmannWeights,
    ) -> Vec<Vec<(VertexFamily, Polynomial)>> {
        self.horizontal
            .iter()
            .enumerate()
            .map(|(r, h)| {
                (0..h.len() - 1)
                    .map(|k| {
                        let (south, p, fam) = weights
                            .vertex_with_family(h[k], self.vertical[r][k], h[k + 1], r)
                            .expect("admissible vertex");
                        assert_eq!(south, self.vertical[r + 1][k]);
                        (fam, p.clone())
                    })
                    .collect()
            })
            .collect()
    }

    /// Largest number of colors on any vertical edge.
    pub fn max_vertical_load(&self) -> usize {
        self.vertical
            .iter()
            .flatten()
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    }
}

fn check_weights(b: &LatticeBoundary, weights: &BoltzmannWeights) {
    assert!(
        weights.rows() >= b.n() && weights.n_colors() >= b.n(),
        "weights cover {} rows and {} colors, boundary needs {}",
        weights.rows(),
        weights.n_colors(),
        b.n()
    );
}

/// One row's worth of vertices, enumerated right to left.
struct RowSearch<'a> {
    weights: &'a BoltzmannWeights,
    row: usize,
    target_west: HLabel,
    exit_rows: &'a [usize],
}

impl RowSearch<'_> {
    fn color_ok(&self, c: u8, below: bool) -> bool {
        let exit = self.exit_rows[c as usize];
        if below {
            exit > self.row
        } else {
            exit >= self.row
        }
    }

    fn set_ok(&self, s: ColorSet) -> bool {
        s.iter().all(|c| self.color_ok(c, true))
    }

    /// Visits every labelling of the row with the given north labels. The
    /// callback receives the south labels, horizontal labels (left to right)
    /// and the vertex weights.
    fn run<F>(&self, north: &[ColorSet], f: &mut F)
    where
        F: FnMut(&[ColorSet], &[HLabel], &[&Polynomial]),
    {
        let width = north.len();
        let mut south = vec![ColorSet::EMPTY; width];
        let mut horiz = vec![HLabel::Plus; width + 1];
        let mut ws: Vec<&Polynomial> = Vec::with_capacity(width);
        self.step(
            north,
            width,
            HLabel::Plus,
            &mut south,
            &mut horiz,
            &mut ws,
            f,
        );
    }

    #[allow(clippy::too_many_arguments)]
    fn step<'w, F>(
        &'w self,
        north: &[ColorSet],
        pos: usize,
        east: HLabel,
        south: &mut Vec<ColorSet>,
        horiz: &mut Vec<HLabel>,
        ws: &mut Vec<&'w Polynomial>,
        f: &mut F,
    ) where
        F: FnMut(&[ColorSet], &[HLabel], &[&Polynomial]),
    {
        horiz[pos] = east;
        if pos == 0 {
            if east == self.target_west {
                f(south, horiz, ws);
            }
            return;
        }
        let k = pos - 1;
        for (west, s, p) in self.weights.west_options(north[k], east, self.row) {
            if let HLabel::Color(c) = west {
                if !self.color_ok(c, false) {
                    continue;
                }
            }
            if !self.set_ok(s) {
                continue;
            }
            south[k] = s;
            ws.push(p);
            self.step(north, k, west, south, horiz, ws, f);
            ws.pop();
        }
    }
}

fn product(n: usize, ws: &[&Polynomial]) -> Polynomial {
    let mut acc = Polynomial::one(n);
    for p in ws {
        if !p.is_one() {
            acc = &acc * *p;
        }
    }
    acc
}

/// Depth-first visit of every admissible state (rows top to bottom, vertices
/// right to left).
pub fn visit_states<F>(b: &LatticeBoundary, weights: &BoltzmannWeights, mut visitor: F)
where
    F: FnMut(&LatticeState),
{
    check_weights(b, weights);
    let exit_rows = b.exit_rows();
    let mut state = LatticeState {
        horizontal: vec![vec![HLabel::Plus; b.big_n + 2]; b.n],
        vertical: vec![vec![ColorSet::EMPTY; b.big_n + 1]; b.n + 1],
        weight: Polynomial::one(weights.context_n()),
    };
    state.vertical[0] = b.top_positions();
    let mut row_weights: Vec<Polynomial> = Vec::with_capacity(b.n);
    visit_rows(
        b,
        weights,
        &exit_rows,
        0,
        &mut state,
        &mut row_weights,
        &mut visitor,
    );
}

fn visit_rows<F>(
    b: &LatticeBoundary,
    weights: &BoltzmannWeights,
    exit_rows: &[usize],
    row: usize,
    state: &mut LatticeState,
    row_weights: &mut Vec<Polynomial>,
    visitor: &mut F,
) where
    F: FnMut(&LatticeState),
{
    if row == b.n {
        if state.vertical[row].iter().all(|s| s.is_empty()) {
            let acc = row_weights
                .iter()
                .fold(Polynomial::one(weights.context_n()), |a, p| &a * p);
            state.weight = acc;
            visitor(state);
        }
        return;
    }
    let search = RowSearch {
        weights,
        row,
        target_west: b.left[row],
        exit_rows,
    };
    let north = state.vertical[row].clone();
    let mut found: Vec<(Vec<ColorSet>, Vec<HLabel>, Polynomial)> = Vec::new();
    search.run(&north, &mut |south, horiz, ws| {
        found.push((
            south.to_vec(),
            horiz.to_vec(),
            product(weights.context_n(), ws),
        ));
    });
    for (south, horiz, w) in found {
        state.vertical[row + 1] = south;
        state.horizontal[row] = horiz;
        row_weights.push(w);
        visit_rows(b, weights, exit_rows, row + 1, state, row_weights, visitor);
        row_weights.pop();
    }
}

/// All admissible states, in traversal order.
pub fn enumerate_states(b: &LatticeBoundary, weights: &BoltzmannWeights) -> Vec<LatticeState> {
    let mut out = Vec::new();
    visit_states(b, weights, |s| out.push(s.clone()));
    out
}

/// Row-transfer evaluation over the vertical-label vectors between rows.
fn transfer<T, Row, Combine>(
    b: &LatticeBoundary,
    weights: &BoltzmannWeights,
    start: T,
    row_value: Row,
    combine: Combine,
) -> Option<T>
where
    T: Clone + Send + Sync,
    Row: Fn(&[&Polynomial]) -> T + Sync,
    Combine: Fn(&T, &T) -> T + Sync,
    T: std::ops::AddAssign<T>,
{
    check_weights(b, weights);
    let exit_rows = b.exit_rows();
    let mut layer: HashMap<Vec<ColorSet>, T> = HashMap::new();
    layer.insert(b.top_positions(), start);
    for row in 0..b.n {
        let search = RowSearch {
            weights,
            row,
            target_west: b.left[row],
            exit_rows: &exit_rows,
        };
        let entries: Vec<(Vec<ColorSet>, T)> = layer.into_iter().collect();
        layer = entries
            .par_iter()
            .map(|(north, acc)| {
                let mut local: HashMap<Vec<ColorSet>, T> = HashMap::new();
                search.run(north, &mut |south, _, ws| {
                    let v = row_value(ws);
                    match local.get_mut(south) {
                        Some(slot) => *slot += v,
                        None => {
                            local.insert(south.to_vec(), v);
                        }
                    }
                });
                local
                    .into_iter()
                    .map(|(k, v)| (k, combine(acc, &v)))
                    .collect::<HashMap<_, _>>()
            })
            .reduce(HashMap::new, |mut a, b| {
                for (k, v) in b {
                    match a.get_mut(&k) {
                        Some(slot) => *slot += v,
                        None => {
                            a.insert(k, v);
                        }
                    }
                }
                a
            });
    }
    let bottom = vec![ColorSet::EMPTY; b.big_n + 1];
    layer.remove(&bottom)
}

/// `Z`: the sum of all state weights.
pub fn partition_function(b: &LatticeBoundary, weights: &BoltzmannWeights) -> Polynomial {
    let n = weights.context_n();
    transfer(
        b,
        weights,
        PolySum(Polynomial::one(n)),
        |ws| PolySum(product(n, ws)),
        |a, v| PolySum(&a.0 * &v.0),
    )
    .map(|s| s.0)
    .unwrap_or_else(|| Polynomial::zero(n))
}

/// `Z` by summing the states found by [`visit_states`].
pub fn partition_function_by_enumeration(
    b: &LatticeBoundary,
    weights: &BoltzmannWeights,
) -> Polynomial {
    let mut z = Polynomial::zero(weights.context_n());
    visit_states(b, weights, |s| z += &s.weight);
    z
}

/// Number of admissible states.
pub fn count_states(b: &LatticeBoundary, weights: &BoltzmannWeights) -> u128 {
    transfer(b, weights, Count(1), |_| Count(1), |a, v| Count(a.0 * v.0))
        .map(|c| c.0)
        .unwrap_or(0)
}

#[derive(Clone)]
struct PolySum(Polynomial);

impl std::ops::AddAssign for PolySum {
    fn add_assign(&mut self, rhs: PolySum) {
        self.0 += &rhs.0;
    }
}

#[derive(Clone, Copy)]
struct Count(u128);

impl std::ops::AddAssign for Count {
    fn add_assign(&mut self, rhs: Count) {
        self.0 = self.0.checked_add(rhs.0).expect("state count overflow");
    }
}

/// Multiplicities of equal parts of `μ` (zero parts included).
fn block_sizes(mu: &Partition) -> Vec<usize> {
    let mut out: Vec<usize> = Vec::new();
    let parts = mu.parts();
    let mut i = 0;
    while i < parts.len() {
        let mut j = i;
        while j < parts.len() && parts[j] == parts[i] {
            j += 1;
        }
        out.push(j - i);
        i = j;
    }
    out
}

fn seed_monomial(mu: &Partition, big_n: usize) -> Result<Polynomial, LatticeError> {
    if (mu.first() as usize) > big_n {
        return Err(LatticeError::NotEnoughColumns {
            big_n,
            mu1: mu.first(),
        });
    }
    let n = mu.len();
    let exps: Vec<u32> = (1..=n).map(|i| big_n as u32 - mu.parts()[n - i]).collect();
    Ok(Polynomial::x_monomial(n, &exps, 1))
}

/// Closed form for the `w1 = id`, `w2 = w0` system in product form:
/// `∏_i ∏_{j=1}^{n_i} (-αβ h_{j-3} - γ h_{j-2}) · ∏_i x_i^{N - μ_{n+1-i}}`,
/// with the `j = 1` factor equal to `1` and the `j = 2` factor `-γ`.
pub fn seed_closed_form(mu: &Partition, big_n: usize) -> Result<Polynomial, LatticeError> {
    let n = mu.len();
    let v = ParamValues::new(&ReducedParams::symbolic(), n, n);
    let ab = &v.alpha * &v.beta;
    let mut scalar = Polynomial::one(n);
    for m in block_sizes(mu) {
        for j in 2..=m as i64 {
            let factor = -(&(&ab * &v.h(j - 3)) + &(&v.gamma * &v.h(j - 2)));
            scalar = &scalar * &factor;
        }
    }
    Ok(&scalar * &seed_monomial(mu, big_n)?)
}

/// The same product with each exit factor taken from (‡) at `m = 0`, i.e.
/// `(-1)^j (αβ h_{j-3} + γ h_{j-2})`.
pub fn seed_closed_form_from_weights(
    mu: &Partition,
    big_n: usize,
) -> Result<Polynomial, LatticeError> {
    let n = mu.len();
    let v = ParamValues::new(&ReducedParams::symbolic(), n, n);
    let mut scalar = Polynomial::one(n);
    for m in block_sizes(mu) {
        for j in 2..=m {
            scalar = &scalar * &v.ddagger(j, 0);
        }
    }
    Ok(&scalar * &seed_monomial(mu, big_n)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ddop::kirillov_poly;
    use crate::poly::Var;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn sym(n: usize) -> BoltzmannWeights {
        BoltzmannWeights::for_lattice(&ReducedParams::symbolic(), n)
    }

    fn perm(s: &str, n: usize) -> Permutation {
        Permutation::parse(s, n, Default::default()).unwrap()
    }

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn h_values() {
        assert!(h_poly(0, 1).is_one());
        assert_eq!(h_poly(1, 1), &Polynomial::alpha(1) + &Polynomial::beta(1));
        let (a, b) = (Polynomial::alpha(1), Polynomial::beta(1));
        let h3 = &(&(&a.pow(3) + &(&a.pow(2) * &b)) + &(&a * &b.pow(2))) + &b.pow(3);
        assert_eq!(h_poly(3, 1), h3);
    }

    #[test]
    fn dagger_values() {
        let n = 2;
        let x = Polynomial::x(n, 2);
        let (a, b, g) = (
            Polynomial::alpha(n),
            Polynomial::beta(n),
            Polynomial::gamma(n),
        );
        assert!(dagger(0, &x).is_one());
        let lead = &(&(&(&a + &g) * &(&b + &g)) * &x) + &g;
        assert_eq!(dagger(1, &x), lead);
        let k2 = -(&(&lead * &(&a + &b)) + &(&a * &b));
        assert_eq!(dagger(2, &x), k2);
        assert_eq!(dagger_alt(2, &x), k2);
    }

    #[test]
    fn ddagger_values() {
        let n = 1;
        let (a, b, g) = (
            Polynomial::alpha(n),
            Polynomial::beta(n),
            Polynomial::gamma(n),
        );
        assert!(ddagger(1, 0, n).is_one());
        assert_eq!(ddagger(2, 1, n), -(&b * &g));
        assert_eq!(ddagger(2, 0, n), g);
        assert_eq!(ddagger(3, 0, n), -(&(&a * &b) + &(&g * &(&a + &b))));
    }

    #[test]
    fn dual_forms_agree() {
        let n = 1;
        let x = Polynomial::x(n, 1);
        for k in 0..=12 {
            assert_eq!(dagger(k, &x), dagger_alt(k, &x), "dagger k = {k}");
        }
        for k in 1..=12 {
            for m in 0..k {
                assert_eq!(
                    ddagger(k, m, n),
                    ddagger_alt(k, m, n),
                    "ddagger k = {k}, m = {m}"
                );
            }
        }
    }

    #[test]
    fn single_vertex_examples() {
        let (s, p) = vertex_weight(2, HLabel::Plus, ColorSet::EMPTY, HLabel::Plus, 1).unwrap();
        assert!(s.is_empty() && p.is_one());
        let (s, p) =
            vertex_weight(2, HLabel::Color(1), ColorSet::EMPTY, HLabel::Color(1), 1).unwrap();
        assert!(s.is_empty());
        assert_eq!(p, Polynomial::x(2, 1));
        // exchange with the smaller color leaving to the west
        let n = 4;
        let (s, p) = vertex_weight(
            n,
            HLabel::Color(2),
            ColorSet::from_colors([2, 4]),
            HLabel::Color(3),
            2,
        )
        .unwrap();
        assert_eq!(s, ColorSet::from_colors([3, 4]));
        let ag = &Polynomial::alpha(n) + &Polynomial::gamma(n);
        let ab = &Polynomial::alpha(n) * &Polynomial::beta(n);
        let expected = &(&Polynomial::one(n) + &(&ag * &Polynomial::x(n, 2))) * &ab;
        assert_eq!(p, expected);
        // exchange with the larger color leaving to the west
        let (s, p) = vertex_weight(
            n,
            HLabel::Color(3),
            ColorSet::from_colors([3, 4]),
            HLabel::Color(1),
            1,
        )
        .unwrap();
        assert_eq!(s, ColorSet::from_colors([1, 4]));
        let bg = &Polynomial::beta(n) + &Polynomial::gamma(n);
        let expected = &(&Polynomial::one(n) + &(&bg * &Polynomial::x(n, 1))) * &ab;
        assert_eq!(p, expected);
        let n = 3;
        let ag = &Polynomial::alpha(n) + &Polynomial::gamma(n);
        let (_, p) = vertex_weight(
            n,
            HLabel::Color(1),
            ColorSet::singleton(1),
            HLabel::Color(2),
            2,
        )
        .unwrap();
        assert_eq!(p, &Polynomial::one(n) + &(&ag * &Polynomial::x(n, 2)));
        assert!(
            vertex_weight(n, HLabel::Plus, ColorSet::singleton(1), HLabel::Color(1), 1).is_none()
        );
        assert!(
            vertex_weight(n, HLabel::Color(2), ColorSet::singleton(1), HLabel::Plus, 1).is_none()
        );
    }

    #[test]
    fn west_option_counts() {
        let w = sym(3);
        let opts = w.west_options(ColorSet::EMPTY, HLabel::Plus, 0);
        assert_eq!(opts.len(), 1);
        let opts = w.west_options(ColorSet::singleton(2), HLabel::Plus, 0);
        assert_eq!(opts.len(), 2);
        let opts = w.west_options(ColorSet::singleton(2), HLabel::Color(1), 0);
        assert_eq!(opts.len(), 3);
        assert!(opts
            .iter()
            .any(|(west, s, _)| *west == HLabel::Color(2) && *s == ColorSet::singleton(1)));
        let opts = w.west_options(ColorSet::singleton(1).with(3), HLabel::Color(3), 0);
        assert_eq!(opts.len(), 1);
    }

    #[test]
    fn boundary_examples() {
        let b = boundary_from(
            &Permutation::identity(3),
            &Permutation::longest(3),
            &Partition::staircase(3),
            2,
        )
        .unwrap();
        assert_eq!(
            b.left(),
            &[HLabel::Color(3), HLabel::Color(2), HLabel::Color(1)]
        );
        assert_eq!(b.top(2), ColorSet::singleton(1));
        assert_eq!(b.top(1), ColorSet::singleton(2));
        assert_eq!(b.top(0), ColorSet::singleton(3));

        let b = boundary_from(&perm("s1 s2", 3), &perm("s2", 3), &part(&[3, 1, 1]), 6).unwrap();
        assert_eq!(b.top(3), ColorSet::singleton(3));
        assert_eq!(b.top(1), ColorSet::from_colors([1, 2]));
        assert_eq!(
            b.left(),
            &[HLabel::Color(1), HLabel::Color(3), HLabel::Color(2)]
        );

        let b = boundary_from(
            &Permutation::identity(1),
            &Permutation::identity(1),
            &part(&[0]),
            4,
        )
        .unwrap();
        assert_eq!(b.left(), &[HLabel::Color(1)]);
        assert_eq!(b.top(0), ColorSet::singleton(1));

        assert!(matches!(
            boundary_from(
                &Permutation::identity(2),
                &Permutation::identity(2),
                &part(&[3, 0]),
                2
            ),
            Err(LatticeError::NotEnoughColumns { .. })
        ));
    }

    #[test]
    fn state_counts_of_examples() {
        let w = sym(3);
        let lambda = part(&[1, 1, 0]);
        let seed = system_for_kn(&Permutation::identity(3), &lambda).unwrap();
        assert_eq!(count_states(&seed, &w), 1);
        assert_eq!(enumerate_states(&seed, &w).len(), 1);

        let s2 = system_for_kn(&perm("s2", 3), &lambda).unwrap();
        assert_eq!(s2.big_n(), 3);
        assert_eq!(count_states(&s2, &w), 2);
        let z = partition_function(&s2, &w);
        let kn = kirillov_poly(&perm("s2", 3), &lambda, &ReducedParams::symbolic()).unwrap();
        assert_eq!(z, kn);
        assert_eq!(partition_function_by_enumeration(&s2, &w), kn);

        let three = boundary_from(&perm("s1 s2", 3), &perm("s2", 3), &part(&[3, 1, 1]), 6).unwrap();
        assert_eq!(count_states(&three, &w), 3);
        assert_eq!(enumerate_states(&three, &w).len(), 3);
    }

    #[test]
    fn one_row_example() {
        let b = boundary_from(
            &Permutation::identity(1),
            &Permutation::identity(1),
            &part(&[0]),
            2,
        )
        .unwrap();
        assert_eq!(
            partition_function(&b, &sym(1)),
            Polynomial::x_monomial(1, &[2], 1)
        );
        let b = system_for_kn(&Permutation::identity(1), &part(&[0])).unwrap();
        assert!(partition_function(&b, &sym(1)).is_one());
    }

    #[test]
    fn states_conserve_colors_and_exit_correctly() {
        let n = 3;
        let w = sym(n);
        for perm in Permutation::all(n) {
            let b = system_for_kn(&perm, &part(&[1, 0, 0])).unwrap();
            for state in enumerate_states(&b, &w) {
                let per_vertex = state.vertex_weights(&w);
                let product = per_vertex
                    .iter()
                    .flatten()
                    .fold(Polynomial::one(n), |a, (_, p)| &a * p);
                assert_eq!(product, state.weight);
                for (r, h) in state.horizontal.iter().enumerate() {
                    assert_eq!(h[0], b.left()[r]);
                    assert_eq!(*h.last().unwrap(), HLabel::Plus);
                    for c in h.iter().filter_map(|l| l.color()) {
                        let exit = b
                            .left()
                            .iter()
                            .position(|l| *l == HLabel::Color(c))
                            .unwrap();
                        assert!(exit >= r, "color {c} travels in row {r} after exiting");
                    }
                }
                assert!(state.vertical[n].iter().all(|s| s.is_empty()));
            }
        }
    }

    #[test]
    fn main_theorem_small() {
        for n in 1..=3 {
            let w = sym(n);
            for lam in [vec![0], vec![1], vec![1, 1], vec![2, 1]] {
                if lam.len() > n {
                    continue;
                }
                let lambda = Partition::padded(&lam, n).unwrap();
                for perm in Permutation::all(n) {
                    let b = system_for_kn(&perm, &lambda).unwrap();
                    let z = partition_function(&b, &w);
                    let kn = kirillov_poly(&perm, &lambda, &ReducedParams::symbolic()).unwrap();
                    assert_eq!(z, kn, "w = {perm}, lambda = {lam:?}");
                    assert_eq!(partition_function_by_enumeration(&b, &w), z);
                }
            }
        }
    }

    #[test]
    fn seed_state_is_unique() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..30 {
            let n = rng.gen_range(1..=4);
            let mut parts: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            parts.sort_by(|a, b| b.cmp(a));
            let mu = Partition::new(parts).unwrap();
            let big_n = mu.first() as usize + rng.gen_range(0..=3);
            let b = boundary_from(
                &Permutation::identity(n),
                &Permutation::longest(n),
                &mu,
                big_n,
            )
            .unwrap();
            assert_eq!(count_states(&b, &sym(n)), 1, "mu = {mu:?}");
            let z = partition_function(&b, &sym(n));
            assert_eq!(z, seed_closed_form_from_weights(&mu, big_n).unwrap());
        }
    }

    #[test]
    fn seed_closed_form_examples() {
        let mu = part(&[1, 1]);
        assert_eq!(seed_closed_form(&mu, 1).unwrap(), -Polynomial::gamma(2));
        assert_eq!(
            seed_closed_form_from_weights(&mu, 1).unwrap(),
            Polynomial::gamma(2)
        );
        let rho = part(&[3, 2, 0]);
        assert_eq!(
            seed_closed_form(&rho, 3).unwrap(),
            Polynomial::x_monomial(3, &[3, 1, 0], 1)
        );
        assert_eq!(
            seed_closed_form(&part(&[0]), 2).unwrap(),
            Polynomial::x_monomial(1, &[2], 1)
        );
        // blocks of size 4 have an even number of even j, so the forms agree
        let four = part(&[1, 1, 1, 1]);
        assert_eq!(
            seed_closed_form(&four, 1).unwrap(),
            seed_closed_form_from_weights(&four, 1).unwrap()
        );
    }

    #[test]
    fn recursion_identity_s3() {
        let n = 3;
        let w = sym(n);
        let params = ReducedParams::symbolic().to_general(n);
        for mu in [
            part(&[2, 1, 0]),
            part(&[2, 2, 0]),
            part(&[1, 1, 1]),
            part(&[3, 1, 1]),
        ] {
            for big_n in [mu.first() as usize, mu.first() as usize + 1] {
                for w2 in Permutation::all(n) {
                    for w1 in Permutation::all(n) {
                        let base =
                            partition_function(&boundary_from(&w1, &w2, &mu, big_n).unwrap(), &w);
                        for i in 1..n {
                            let up = w1.left_mul_simple(i);
                            if up.length() <= w1.length() {
                                continue;
                            }
                            let z = partition_function(
                                &boundary_from(&up, &w2, &mu, big_n).unwrap(),
                                &w,
                            );
                            assert_eq!(
                                z,
                                params.apply(i, &base).unwrap(),
                                "w1 = {w1}, i = {i}, w2 = {w2}, mu = {mu:?}"
                            );
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_zero_paths_are_single_colored() {
        for n in 2..=4 {
            let w = BoltzmannWeights::for_lattice(&ReducedParams::gamma_zero(), n);
            for perm in Permutation::all(n) {
                let b = system_for_kn(&perm, &Partition::padded(&[1], n).unwrap()).unwrap();
                visit_states(&b, &w, |state| {
                    assert!(state.max_vertical_load() <= 1);
                    for (_, p) in state.vertex_weights(&w).into_iter().flatten() {
                        assert!(p.nonneg_report().all_nonneg);
                    }
                });
            }
        }
    }

    #[test]
    fn multicolor_states_are_divisible_by_gamma() {
        let n = 3;
        let w = sym(n);
        let kill = [(Var::Gamma, Polynomial::zero(n))];
        for perm in Permutation::all(n) {
            let b = system_for_kn(&perm, &part(&[2, 1, 0])).unwrap();
            visit_states(&b, &w, |state| {
                if state.max_vertical_load() > 1 {
                    assert!(state.weight.substitute(&kill).unwrap().is_zero());
                }
            });
        }
    }

    #[test]
    fn invalid_boundaries() {
        assert!(LatticeBoundary::new(
            2,
            1,
            vec![HLabel::Color(1), HLabel::Color(1)],
            vec![ColorSet::from_colors([1, 2]), ColorSet::EMPTY]
        )
        .is_err());
        assert!(LatticeBoundary::new(
            2,
            1,
            vec![HLabel::Color(1), HLabel::Color(2)],
            vec![ColorSet::singleton(1), ColorSet::EMPTY]
        )
        .is_err());
        assert!(LatticeBoundary::new(
            2,
            1,
            vec![HLabel::Color(2), HLabel::Color(1)],
            vec![ColorSet::singleton(1), ColorSet::singleton(2)]
        )
        .is_ok());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]

        #[test]
        fn dfs_matches_transfer(seed in any::<u64>()) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let n = rng.gen_range(1..=3);
            let mut parts: Vec<u32> = (0..n).map(|_| rng.gen_range(0..=2)).collect();
            parts.sort_by(|a, b| b.cmp(a));
            let mu = Partition::new(parts).unwrap();
            let all = Permutation::all(n);
            let w1 = &all[rng.gen_range(0..all.len())];
            let w2 = &all[rng.gen_range(0..all.len())];
            let big_n = mu.first() as usize + rng.gen_range(0..=2);
            let b = boundary_from(w1, w2, &mu, big_n).unwrap();
            let w = sym(n);
            prop_assert_eq!(partition_function(&b, &w), partition_function_by_enumeration(&b, &w));
            prop_assert_eq!(count_states(&b, &w), enumerate_states(&b, &w).len() as u128);
        }
    }
}
