//! Divided-difference operators `T_i = a + (b x_i + c x_{i+1} + h + e x_i x_{i+1}) ∂_i`
//! and the polynomial families they generate.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::poly::{PolyError, Polynomial};
use crate::weyl::{Composition, Partition, Permutation, WeylError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DdopError {
    #[error("parameters do not satisfy the braid condition: (a+b)(a-c)+he = {0}")]
    NonBraiding(String),
    #[error("size mismatch: expected n = {expected}, got {got}")]
    SizeMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Weyl(#[from] WeylError),
}

/// An integer linear form `k_α α + k_β β + k_γ γ + k_0`, used to specialize
/// the reduced parameters without committing to a variable context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct ParamExpr {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub constant: i64,
}

impl ParamExpr {
    pub const ALPHA: ParamExpr = ParamExpr {
        alpha: 1,
        beta: 0,
        gamma: 0,
        constant: 0,
    };
    pub const BETA: ParamExpr = ParamExpr {
        alpha: 0,
        beta: 1,
        gamma: 0,
        constant: 0,
    };
    pub const GAMMA: ParamExpr = ParamExpr {
        alpha: 0,
        beta: 0,
        gamma: 1,
        constant: 0,
    };

    pub const fn int(c: i64) -> Self {
        ParamExpr {
            alpha: 0,
            beta: 0,
            gamma: 0,
            constant: c,
        }
    }

    pub fn to_poly(&self, n: usize) -> Polynomial {
        let mut p = Polynomial::constant(n, self.constant);
        for (k, v) in [
            (self.alpha, Polynomial::alpha(n)),
            (self.beta, Polynomial::beta(n)),
            (self.gamma, Polynomial::gamma(n)),
        ] {
            if k != 0 {
                p += &v.scale(&k.into());
            }
        }
        p
    }
}

impl fmt::Display for ParamExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_poly(1))
    }
}

/// The reduced family: `(α, β, γ)` either left symbolic or specialized.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct ReducedParams {
    pub alpha: ParamExpr,
    pub beta: ParamExpr,
    pub gamma: ParamExpr,
}

impl Default for ReducedParams {
    fn default() -> Self {
        Self::symbolic()
    }
}

impl ReducedParams {
    pub const fn symbolic() -> Self {
        ReducedParams {
            alpha: ParamExpr::ALPHA,
            beta: ParamExpr::BETA,
            gamma: ParamExpr::GAMMA,
        }
    }

    pub const fn new(alpha: ParamExpr, beta: ParamExpr, gamma: ParamExpr) -> Self {
        ReducedParams { alpha, beta, gamma }
    }

    /// `γ = 0`, α and β symbolic.
    pub const fn gamma_zero() -> Self {
        Self::new(ParamExpr::ALPHA, ParamExpr::BETA, ParamExpr::int(0))
    }

    /// `(α, β, γ) ↦ (-α, -β, α + β)`.
    pub const fn negated_with_sum() -> Self {
        Self::new(
            ParamExpr {
                alpha: -1,
                beta: 0,
                gamma: 0,
                constant: 0,
            },
            ParamExpr {
                alpha: 0,
                beta: -1,
                gamma: 0,
                constant: 0,
            },
            ParamExpr {
                alpha: 1,
                beta: 1,
                gamma: 0,
                constant: 0,
            },
        )
    }

    /// `α = β = 1, γ = 0`.
    pub const fn dz() -> Self {
        Self::new(ParamExpr::int(1), ParamExpr::int(1), ParamExpr::int(0))
    }

    /// Integer specialization of all three parameters.
    pub const fn ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(
            ParamExpr::int(alpha),
            ParamExpr::int(beta),
            ParamExpr::int(gamma),
        )
    }

    pub fn values(&self, n: usize) -> (Polynomial, Polynomial, Polynomial) {
        (
            self.alpha.to_poly(n),
            self.beta.to_poly(n),
            self.gamma.to_poly(n),
        )
    }

    /// `a = -β, b = α+β+γ, c = γ, h = 1, e = (α+γ)(β+γ)`.
    pub fn to_general(&self, n: usize) -> GeneralParams {
        let (al, be, ga) = self.values(n);
        let aplusg = &al + &ga;
        let bplusg = &be + &ga;
        GeneralParams {
            a: -&be,
            b: &(&al + &be) + &ga,
            c: ga,
            h: Polynomial::one(n),
            e: &aplusg * &bplusg,
        }
    }
}

/// The five-parameter operator family.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneralParams {
    pub a: Polynomial,
    pub b: Polynomial,
    pub c: Polynomial,
    pub h: Polynomial,
    pub e: Polynomial,
}

impl GeneralParams {
    pub fn new(a: Polynomial, b: Polynomial, c: Polynomial, h: Polynomial, e: Polynomial) -> Self {
        GeneralParams { a, b, c, h, e }
    }

    pub fn from_ints(n: usize, [a, b, c, h, e]: [i64; 5]) -> Self {
        let k = |v: i64| Polynomial::constant(n, v);
        GeneralParams::new(k(a), k(b), k(c), k(h), k(e))
    }

    /// `(0, 0, 0, 1, 0)`: `T_i = ∂_i`.
    pub fn schubert(n: usize) -> Self {
        Self::from_ints(n, [0, 0, 0, 1, 0])
    }

    /// `(-β, β, 0, 1, 0)`.
    pub fn beta_grothendieck(n: usize) -> Self {
        let beta = Polynomial::beta(n);
        GeneralParams::new(
            -&beta,
            beta,
            Polynomial::zero(n),
            Polynomial::one(n),
            Polynomial::zero(n),
        )
    }

    pub fn n(&self) -> usize {
        self.a.n()
    }

    /// `(a+b)(a-c) + he`.
    pub fn braid_condition(&self) -> Polynomial {
        &(&(&self.a + &self.b) * &(&self.a - &self.c)) + &(&self.h * &self.e)
    }

    pub fn is_braiding(&self) -> bool {
        self.braid_condition().is_zero()
    }

    fn require_braiding(&self) -> Result<(), DdopError> {
        let cond = self.braid_condition();
        if cond.is_zero() {
            Ok(())
        } else {
            Err(DdopError::NonBraiding(cond.to_string()))
        }
    }

    /// `b x_i + c x_{i+1} + h + e x_i x_{i+1}`.
    pub fn multiplier(&self, i: usize) -> Result<Polynomial, DdopError> {
        let n = self.n();
        if i == 0 || i >= n {
            return Err(PolyError::IndexOutOfRange { index: i, n }.into());
        }
        let xi = Polynomial::x(n, i);
        let xj = Polynomial::x(n, i + 1);
        let mut m = &self.b * &xi;
        m += &(&self.c * &xj);
        m += &self.h;
        m += &(&self.e * &(&xi * &xj));
        Ok(m)
    }

    /// `T_i f`.
    pub fn apply(&self, i: usize, f: &Polynomial) -> Result<Polynomial, DdopError> {
        self.check_n(f)?;
        let m = self.multiplier(i)?;
        Ok(apply_with_multiplier(&self.a, &m, i, f)?)
    }

    /// `T_{i1} ∘ ... ∘ T_{il}` applied to `f`, rightmost first.
    pub fn apply_word(&self, word: &[usize], f: &Polynomial) -> Result<Polynomial, DdopError> {
        self.check_n(f)?;
        let n = self.n();
        let mut multipliers: Vec<Option<Polynomial>> = vec![None; n];
        let mut g = f.clone();
        for &i in word.iter().rev() {
            if i == 0 || i >= n {
                return Err(PolyError::IndexOutOfRange { index: i, n }.into());
            }
            if multipliers[i].is_none() {
                multipliers[i] = Some(self.multiplier(i)?);
            }
            g = apply_with_multiplier(&self.a, multipliers[i].as_ref().unwrap(), i, &g)?;
        }
        Ok(g)
    }

    fn check_n(&self, f: &Polynomial) -> Result<(), DdopError> {
        if f.n() != self.n() {
            return Err(DdopError::SizeMismatch {
                expected: self.n(),
                got: f.n(),
            });
        }
        Ok(())
    }
}

fn apply_with_multiplier(
    a: &Polynomial,
    m: &Polynomial,
    i: usize,
    f: &Polynomial,
) -> Result<Polynomial, PolyError> {
    let mut out = m * &f.divided_difference(i)?;
    if !a.is_zero() {
        out += &(a * f);
    }
    Ok(out)
}

/// `T_i` for the reduced family.
pub fn apply_t(params: &ReducedParams, i: usize, f: &Polynomial) -> Result<Polynomial, DdopError> {
    params.to_general(f.n()).apply(i, f)
}

/// Exponent vector `d_i = λ_1 - λ_{n+1-i} + n - i`.
pub fn kirillov_exponents(lambda: &Partition) -> Vec<u32> {
    let n = lambda.len();
    let l = lambda.parts();
    (1..=n).map(|i| l[0] - l[n - i] + (n - i) as u32).collect()
}

fn check_sizes(w: &Permutation, lambda: &Partition) -> Result<(), DdopError> {
    if w.n() != lambda.len() {
        return Err(DdopError::SizeMismatch {
            expected: w.n(),
            got: lambda.len(),
        });
    }
    Ok(())
}

/// `KN_w(x; λ)` computed along the canonical reduced word of `w`.
pub fn kirillov_poly(
    w: &Permutation,
    lambda: &Partition,
    params: &ReducedParams,
) -> Result<Polynomial, DdopError> {
    kirillov_poly_with_word(w, &w.reduced_word(), lambda, params)
}

/// `KN_w(x; λ)` along an explicitly supplied reduced word of `w`.
pub fn kirillov_poly_with_word(
    w: &Permutation,
    word: &[usize],
    lambda: &Partition,
    params: &ReducedParams,
) -> Result<Polynomial, DdopError> {
    check_sizes(w, lambda)?;
    let n = w.n();
    debug_assert_eq!(&Permutation::from_word(word, n)?, w);
    let seed = Polynomial::x_monomial(n, &kirillov_exponents(lambda), 1);
    params.to_general(n).apply_word(word, &seed)
}

/// `T_{w^{-1} w_0}(x^ρ)`; requires braiding parameters.
pub fn generalized_schubert(w: &Permutation, p: &GeneralParams) -> Result<Polynomial, DdopError> {
    p.require_braiding()?;
    let n = w.n();
    if p.n() != n {
        return Err(DdopError::SizeMismatch {
            expected: n,
            got: p.n(),
        });
    }
    let v = &w.inverse() * &Permutation::longest(n);
    let rho = Partition::staircase(n);
    let seed = Polynomial::x_monomial(n, rho.parts(), 1);
    p.apply_word(&v.reduced_word(), &seed)
}

/// `K_ζ = T_{v_ζ}(x^{ζ+})`; requires braiding parameters.
pub fn key_polynomial(zeta: &Composition, p: &GeneralParams) -> Result<Polynomial, DdopError> {
    p.require_braiding()?;
    let n = zeta.len();
    if p.n() != n {
        return Err(DdopError::SizeMismatch {
            expected: n,
            got: p.n(),
        });
    }
    let (plus, v) = zeta.sort();
    let seed = Polynomial::x_monomial(n, plus.parts(), 1);
    p.apply_word(&v.reduced_word(), &seed)
}

/// `KN_w(x; 0)` at `α = β = 1, γ = 0`.
pub fn dz_polynomial(w: &Permutation) -> Result<Polynomial, DdopError> {
    kirillov_poly(w, &Partition::zero(w.n()), &ReducedParams::dz())
}

/// `T_i T_i f - (α-β) T_i f - αβ f`; identically zero.
pub fn hecke_defect(
    params: &ReducedParams,
    i: usize,
    f: &Polynomial,
) -> Result<Polynomial, DdopError> {
    let n = f.n();
    let g = params.to_general(n);
    let (al, be, _) = params.values(n);
    let tf = g.apply(i, f)?;
    let ttf = g.apply(i, &tf)?;
    Ok(&(&ttf - &(&(&al - &be) * &tf)) - &(&(&al * &be) * f))
}

/// `T_i T_{i+1} T_i f - T_{i+1} T_i T_{i+1} f`.
pub fn braid_defect(p: &GeneralParams, i: usize, f: &Polynomial) -> Result<Polynomial, DdopError> {
    let lhs = p.apply_word(&[i, i + 1, i], f)?;
    let rhs = p.apply_word(&[i + 1, i, i + 1], f)?;
    Ok(&lhs - &rhs)
}

/// A witness of braid failure found by exhaustive search over monomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BraidWitness {
    pub i: usize,
    pub monomial: Vec<u32>,
    pub defect: Polynomial,
}

/// Searches the monomials in `x_1..x_n` of total degree at most `max_degree`
/// for one on which the braid relation fails.
pub fn find_braid_witness(
    p: &GeneralParams,
    max_degree: u32,
) -> Result<Option<BraidWitness>, DdopError> {
    let n = p.n();
    for deg in 0..=max_degree {
        for exps in monomials_of_degree(n, deg) {
            let f = Polynomial::x_monomial(n, &exps, 1);
            for i in 1..n.saturating_sub(1) {
                let defect = braid_defect(p, i, &f)?;
                if !defect.is_zero() {
                    return Ok(Some(BraidWitness {
                        i,
                        monomial: exps,
                        defect,
                    }));
                }
            }
        }
    }
    Ok(None)
}

/// Exponent vectors of length `n` summing to `deg`.
pub fn monomials_of_degree(n: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(n: usize, deg: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == n {
            prefix.push(deg);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for k in (0..=deg).rev() {
            prefix.push(k);
            rec(n, deg - k, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, deg, &mut Vec::new(), &mut out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl::PermFormat;
    use proptest::prelude::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn worked_value(n: usize) -> Polynomial {
        let al = Polynomial::alpha(n);
        let be = Polynomial::beta(n);
        let ga = Polynomial::gamma(n);
        let x1_3 = Polynomial::x_monomial(n, &[3, 0, 0], 1);
        let x2 = Polynomial::x(n, 2);
        let x3 = Polynomial::x(n, 3);
        let mut v = x1_3.clone();
        v += &(&(&al + &ga) * &(&x1_3 * &x2));
        v += &(&ga * &(&x1_3 * &x3));
        v += &(&(&(&al + &ga) * &(&be + &ga)) * &(&x1_3 * &(&x2 * &x3)));
        v
    }

    #[test]
    fn braid_conditions() {
        assert!(GeneralParams::schubert(3).braid_condition().is_zero());
        assert!(GeneralParams::beta_grothendieck(3).is_braiding());
        assert!(ReducedParams::symbolic()
            .to_general(3)
            .braid_condition()
            .is_zero());
        let bad = GeneralParams::from_ints(3, [1, 0, 0, 1, 0]);
        assert!(bad.braid_condition().is_one());
    }

    #[test]
    fn single_operator_examples() {
        let s = GeneralParams::schubert(2);
        assert!(s.apply(1, &Polynomial::x(2, 1)).unwrap().is_one());
        let seed = Polynomial::x_monomial(3, &[2, 1, 0], 1);
        assert_eq!(
            GeneralParams::schubert(3).apply_word(&[], &seed).unwrap(),
            seed
        );
        let f = Polynomial::x_monomial(3, &[3, 1, 0], 1);
        assert_eq!(
            apply_t(&ReducedParams::symbolic(), 2, &f).unwrap(),
            worked_value(3)
        );
        assert!(GeneralParams::schubert(3).apply(3, &f).is_err());
    }

    #[test]
    fn worked_kirillov_example() {
        let lambda = Partition::new(vec![1, 1, 0]).unwrap();
        assert_eq!(kirillov_exponents(&lambda), vec![3, 1, 0]);
        let id = Permutation::identity(3);
        let sym = ReducedParams::symbolic();
        assert_eq!(
            kirillov_poly(&id, &lambda, &sym).unwrap(),
            Polynomial::x_monomial(3, &[3, 1, 0], 1)
        );
        let s2 = Permutation::simple(2, 3).unwrap();
        assert_eq!(kirillov_poly(&s2, &lambda, &sym).unwrap(), worked_value(3));
        assert_eq!(
            kirillov_poly(&id, &Partition::zero(3), &sym).unwrap(),
            Polynomial::x_monomial(3, &[2, 1, 0], 1)
        );
    }

    #[test]
    fn schubert_family_examples() {
        let w0 = Permutation::longest(3);
        let rho = Polynomial::x_monomial(3, &[2, 1, 0], 1);
        assert_eq!(
            generalized_schubert(&w0, &GeneralParams::schubert(3)).unwrap(),
            rho
        );
        let id = Permutation::identity(3);
        assert!(generalized_schubert(&id, &GeneralParams::schubert(3))
            .unwrap()
            .is_one());
        // β-Grothendieck for s1 in S2: T_1 on x_1 from empty word; w^{-1} w0 = id
        let s1 = Permutation::simple(1, 2).unwrap();
        let g = GeneralParams::beta_grothendieck(2);
        assert_eq!(generalized_schubert(&s1, &g).unwrap(), Polynomial::x(2, 1));
        // identity: (-β) x_1 + (β x_1 + 1) = 1
        assert!(generalized_schubert(&Permutation::identity(2), &g)
            .unwrap()
            .is_one());
        let bad = GeneralParams::from_ints(2, [1, 0, 0, 1, 0]);
        assert!(matches!(
            generalized_schubert(&s1, &bad),
            Err(DdopError::NonBraiding(_))
        ));
    }

    #[test]
    fn key_polynomial_examples() {
        let sym = ReducedParams::symbolic();
        let zeta = Composition::new(vec![2, 1, 0]);
        assert_eq!(
            key_polynomial(&zeta, &sym.to_general(3)).unwrap(),
            Polynomial::x_monomial(3, &[2, 1, 0], 1)
        );
        let zeta = Composition::new(vec![0, 1]);
        let expected = apply_t(&sym, 1, &Polynomial::x(2, 1)).unwrap();
        assert_eq!(key_polynomial(&zeta, &sym.to_general(2)).unwrap(), expected);
        // T_1(x_1) = -β x_1 + (α+β+γ)x_1 + γ x_2 + 1 + (α+γ)(β+γ) x_1 x_2
        let ga = Polynomial::gamma(2);
        let mut hand = &(&Polynomial::alpha(2) + &ga) * &Polynomial::x(2, 1);
        hand += &(&ga * &Polynomial::x(2, 2));
        hand += &Polynomial::one(2);
        hand += &(&(&(&Polynomial::alpha(2) + &ga) * &(&Polynomial::beta(2) + &ga))
            * &Polynomial::x_monomial(2, &[1, 1], 1));
        assert_eq!(expected, hand);
    }

    #[test]
    fn dz_examples() {
        assert_eq!(
            dz_polynomial(&Permutation::identity(3)).unwrap(),
            Polynomial::x_monomial(3, &[2, 1, 0], 1)
        );
        let s2 = Permutation::simple(2, 3).unwrap();
        let sym = kirillov_poly(&s2, &Partition::zero(3), &ReducedParams::symbolic()).unwrap();
        let n = 3;
        let one = Polynomial::one(n);
        let zero = Polynomial::zero(n);
        let specialized = sym
            .substitute(&[
                (crate::poly::Var::Alpha, one.clone()),
                (crate::poly::Var::Beta, one),
                (crate::poly::Var::Gamma, zero),
            ])
            .unwrap();
        assert_eq!(dz_polynomial(&s2).unwrap(), specialized);
    }

    #[test]
    fn orientation_of_word_application() {
        let sym = ReducedParams::symbolic();
        for lambda in [vec![0, 0, 0], vec![1, 1, 0]] {
            let lambda = Partition::new(lambda).unwrap();
            for w in Permutation::all(3) {
                let base = kirillov_poly(&w, &lambda, &sym).unwrap();
                for i in 1..3 {
                    let up = w.left_mul_simple(i);
                    if up.length() > w.length() {
                        let expected = apply_t(&sym, i, &base).unwrap();
                        assert_eq!(kirillov_poly(&up, &lambda, &sym).unwrap(), expected);
                    }
                }
            }
        }
    }

    #[test]
    fn word_independence_in_s4() {
        let sym = ReducedParams::symbolic();
        let lambda = Partition::new(vec![1, 0, 0, 0]).unwrap();
        for w in Permutation::all(4) {
            let canonical = kirillov_poly(&w, &lambda, &sym).unwrap();
            for word in w.all_reduced_words() {
                assert_eq!(
                    kirillov_poly_with_word(&w, &word, &lambda, &sym).unwrap(),
                    canonical,
                    "w = {w}, word = {word:?}"
                );
            }
        }
    }

    #[test]
    fn two_words_for_w0_agree() {
        let p = ReducedParams::symbolic().to_general(3);
        let f = Polynomial::x_monomial(3, &[2, 1, 0], 1);
        assert_eq!(
            p.apply_word(&[1, 2, 1], &f).unwrap(),
            p.apply_word(&[2, 1, 2], &f).unwrap()
        );
    }

    #[test]
    fn non_braiding_witness_exists() {
        let bad = GeneralParams::from_ints(3, [1, 0, 0, 1, 0]);
        let witness = find_braid_witness(&bad, 3).unwrap().expect("braid failure");
        assert!(!witness.defect.is_zero());
        assert!(find_braid_witness(&GeneralParams::schubert(3), 3)
            .unwrap()
            .is_none());
    }

    #[test]
    fn specialization_commutes_with_operators() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let w = Permutation::parse("3142", 4, PermFormat::OneLine).unwrap();
        let lambda = Partition::new(vec![1, 1, 0, 0]).unwrap();
        for params in [
            ReducedParams::ints(2, -1, 3),
            ReducedParams::negated_with_sum(),
        ] {
            let direct = kirillov_poly(&w, &lambda, &params).unwrap();
            let sym = kirillov_poly(&w, &lambda, &ReducedParams::symbolic()).unwrap();
            let n = 4;
            let (a, b, c) = params.values(n);
            let via = sym
                .substitute(&[
                    (crate::poly::Var::Alpha, a),
                    (crate::poly::Var::Beta, b),
                    (crate::poly::Var::Gamma, c),
                ])
                .unwrap();
            assert_eq!(direct, via);
            let f = Polynomial::random(n, &mut rng, 3, 4, false);
            let word = w.reduced_word();
            let sym_f = ReducedParams::symbolic()
                .to_general(n)
                .apply_word(&word, &f)
                .unwrap();
            let (a, b, c) = params.values(n);
            let spec_f = sym_f
                .substitute(&[
                    (crate::poly::Var::Alpha, a),
                    (crate::poly::Var::Beta, b),
                    (crate::poly::Var::Gamma, c),
                ])
                .unwrap();
            assert_eq!(params.to_general(n).apply_word(&word, &f).unwrap(), spec_f);
        }
    }

    #[test]
    fn monomial_listing() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(1, 4), vec![vec![4]]);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]

        #[test]
        fn hecke_relation(seed in any::<u64>(), n in 2usize..=4, raw_i in 1usize..4) {
            let i = 1 + (raw_i - 1) % (n - 1);
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = Polynomial::random(n, &mut rng, 4, 5, true);
            let d = hecke_defect(&ReducedParams::symbolic(), i, &f).unwrap();
            prop_assert!(d.is_zero());
        }

        #[test]
        fn braid_relation(seed in any::<u64>(), n in 3usize..=4) {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let f = Polynomial::random(n, &mut rng, 3, 4, false);
            for p in [
                ReducedParams::symbolic().to_general(n),
                GeneralParams::schubert(n),
                GeneralParams::beta_grothendieck(n),
            ] {
                for i in 1..n - 1 {
                    prop_assert!(braid_defect(&p, i, &f).unwrap().is_zero());
                }
            }
        }
    }
}
