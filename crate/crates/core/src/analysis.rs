//! Positivity scans, counterexample searches and specialization cross-checks.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::ddop::{self, DdopError, GeneralParams, ReducedParams};
use crate::lattice::{self, BoltzmannWeights, LatticeError};
use crate::poly::{NonnegReport, Polynomial, Var};
use crate::weyl::{Composition, Partition, Permutation};

pub const MAX_SCAN_N: usize = 5;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error("n = {0} exceeds the scan limit {1}")]
    TooLarge(usize, usize),
    #[error("operator and lattice oracles disagree for w = {0}")]
    OracleDisagreement(String),
    #[error("a multi-color state for w = {0} has weight not divisible by gamma")]
    GammaDivisibility(String),
    #[error(transparent)]
    Ddop(#[from] DdopError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PositivityMode {
    /// `(β, α, 0)`.
    GammaZero,
    /// `(β, α, γ)`.
    Symbolic,
    /// `(-β, -α, α + β)`.
    GammaNegSum,
    /// `α = β = 1, γ = 0`.
    Dz,
}

impl PositivityMode {
    pub const ALL: [PositivityMode; 4] = [
        PositivityMode::GammaZero,
        PositivityMode::Symbolic,
        PositivityMode::GammaNegSum,
        PositivityMode::Dz,
    ];

    pub fn params(self) -> ReducedParams {
        match self {
            PositivityMode::GammaZero => ReducedParams::gamma_zero(),
            PositivityMode::Symbolic => ReducedParams::symbolic(),
            PositivityMode::GammaNegSum => ReducedParams::negated_with_sum(),
            PositivityMode::Dz => ReducedParams::dz(),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PositivityMode::GammaZero => "gamma0",
            PositivityMode::Symbolic => "symbolic",
            PositivityMode::GammaNegSum => "neg",
            PositivityMode::Dz => "dz",
        }
    }
}

impl fmt::Display for PositivityMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for PositivityMode {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "gamma0" | "gamma_zero" => Ok(PositivityMode::GammaZero),
            "symbolic" => Ok(PositivityMode::Symbolic),
            "neg" | "gamma_neg_sum" => Ok(PositivityMode::GammaNegSum),
            "dz" => Ok(PositivityMode::Dz),
            other => Err(format!(
                "unknown positivity mode {other:?}; expected gamma0, symbolic, neg or dz"
            )),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PermutationScan {
    pub w: Vec<usize>,
    pub terms: usize,
    pub nonneg: NonnegReport,
    /// No α, β or γ survives the specialization.
    pub integer_coefficients: bool,
    pub oracles_agree: bool,
    /// States with a multi-color vertical edge; checked only in symbolic mode.
    pub multicolor_states: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    pub n: usize,
    pub mode: PositivityMode,
    pub entries: Vec<PermutationScan>,
}

impl PositivityReport {
    pub fn negative(&self) -> Vec<&PermutationScan> {
        self.entries
            .iter()
            .filter(|e| !e.nonneg.all_nonneg)
            .collect()
    }

    pub fn all_nonneg(&self) -> bool {
        self.entries.iter().all(|e| e.nonneg.all_nonneg)
    }

    pub fn oracles_agree(&self) -> bool {
        self.entries.iter().all(|e| e.oracles_agree)
    }
}

fn has_parameters(p: &Polynomial) -> bool {
    [Var::Alpha, Var::Beta, Var::Gamma]
        .iter()
        .any(|&v| p.degree_in(v) > 0)
}

/// Multi-color states and whether each has weight divisible by `γ`.
fn gamma_divisibility_for(
    boundary: &lattice::LatticeBoundary,
    weights: &BoltzmannWeights,
) -> (u64, bool) {
    let n = boundary.n();
    let kill = [(Var::Gamma, Polynomial::zero(n))];
    let mut count = 0;
    let mut ok = true;
    lattice::visit_states(boundary, weights, |state| {
        if state.max_vertical_load() > 1 {
            count += 1;
            if !state
                .weight
                .substitute(&kill)
                .expect("gamma is always in scope")
                .is_zero()
            {
                ok = false;
            }
        }
    });
    (count, ok)
}

/// `KN_w(x; 0)` for every `w ∈ S_n` under `mode`, via both oracles.
pub fn scan_positivity(n: usize, mode: PositivityMode) -> Result<PositivityReport, AnalysisError> {
    if n > MAX_SCAN_N {
        return Err(AnalysisError::TooLarge(n, MAX_SCAN_N));
    }
    let params = mode.params();
    let weights = BoltzmannWeights::for_lattice(&params, n);
    let lambda = Partition::zero(n);
    let entries = Permutation::all(n)
        .par_iter()
        .map(|w| -> Result<PermutationScan, AnalysisError> {
            let kn = ddop::kirillov_poly(w, &lambda, &params)?;
            let boundary = lattice::system_for_kn(w, &lambda)?;
            let z = lattice::partition_function(&boundary, &weights);
            if z != kn {
                return Err(AnalysisError::OracleDisagreement(w.to_oneline_string()));
            }
            let multicolor_states = if mode == PositivityMode::Symbolic {
                let (count, ok) = gamma_divisibility_for(&boundary, &weights);
                if !ok {
                    return Err(AnalysisError::GammaDivisibility(w.to_oneline_string()));
                }
                Some(count)
            } else {
                None
            };
            Ok(PermutationScan {
                w: w.oneline().to_vec(),
                terms: kn.len(),
                nonneg: kn.nonneg_report(),
                integer_coefficients: !has_parameters(&kn),
                oracles_agree: true,
                multicolor_states,
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(PositivityReport { n, mode, entries })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct NegativeWitness {
    pub w: Vec<usize>,
    pub exponents: Vec<u32>,
    pub coefficient: String,
}

/// Permutations whose symbolic `KN_w(x; 0)` has a negative coefficient.
pub fn negative_witnesses(n: usize) -> Result<Vec<NegativeWitness>, AnalysisError> {
    let report = scan_positivity(n, PositivityMode::Symbolic)?;
    Ok(report
        .entries
        .into_iter()
        .filter_map(|e| {
            e.nonneg
                .witness
                .map(|(exponents, coefficient)| NegativeWitness {
                    w: e.w,
                    exponents,
                    coefficient,
                })
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KeyReport {
    pub zeta: Vec<u32>,
    pub sorting_permutation: Vec<usize>,
    pub contained_in_staircase: bool,
    pub terms: usize,
    pub nonneg: NonnegReport,
}

/// `K_ζ` with symbolic `(β, α, γ)`.
pub fn key_positivity(zeta: &Composition) -> Result<KeyReport, AnalysisError> {
    let n = zeta.parts().len();
    let (_, v) = zeta.sort();
    let key = ddop::key_polynomial(zeta, &ReducedParams::symbolic().to_general(n))?;
    let rho: Vec<u32> = Partition::staircase(n)
        .parts()
        .iter()
        .map(|p| p + 1)
        .collect();
    Ok(KeyReport {
        zeta: zeta.parts().to_vec(),
        sorting_permutation: v.oneline().to_vec(),
        contained_in_staircase: zeta.contained_in(&rho),
        terms: key.len(),
        nonneg: key.nonneg_report(),
    })
}

/// `ζ = (1, 2, 2, 1) ⊂ (4, 3, 2, 1)`.
pub fn key_positivity_counterexample() -> Result<KeyReport, AnalysisError> {
    key_positivity(&Composition::new(vec![1, 2, 2, 1]))
}

/// Classical Schubert polynomials from divided differences on exponent maps.
pub mod classical {
    use std::collections::{BTreeMap, HashMap};

    use crate::weyl::Permutation;

    pub type IntPoly = BTreeMap<Vec<u32>, i64>;

    /// `∂_i` (1-based) applied monomial by monomial.
    pub fn divided_difference(p: &IntPoly, i: usize) -> IntPoly {
        let mut out = IntPoly::new();
        for (e, &c) in p {
            let (a, b) = (e[i - 1], e[i]);
            if a == b {
                continue;
            }
            let (hi, lo, sign) = if a > b { (a, b, 1) } else { (b, a, -1) };
            // (x_i^a x_{i+1}^b)^{s_i} - x_i^a x_{i+1}^b over x_{i+1} - x_i
            for k in 0..hi - lo {
                let mut m = e.clone();
                m[i - 1] = lo + k;
                m[i] = hi - 1 - k;
                *out.entry(m).or_insert(0) += sign * c;
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    /// `𝔖_w` for every `w ∈ S_n`, from `𝔖_{w0} = x^ρ` and
    /// `𝔖_{w s_i} = ∂_i 𝔖_w` whenever `w(i) > w(i+1)`.
    pub fn schubert_all(n: usize) -> HashMap<Vec<usize>, IntPoly> {
        let w0: Vec<usize> = (1..=n).rev().collect();
        let rho: Vec<u32> = (0..n as u32).rev().collect();
        let mut table = HashMap::new();
        table.insert(w0.clone(), IntPoly::from([(rho, 1)]));
        let mut frontier = vec![w0];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for w in &frontier {
                for i in 1..n {
                    if w[i - 1] > w[i] {
                        let mut ws = w.clone();
                        ws.swap(i - 1, i);
                        if !table.contains_key(&ws) {
                            let p = divided_difference(&table[w], i);
                            table.insert(ws.clone(), p);
                            next.push(ws);
                        }
                    }
                }
            }
            frontier = next;
        }
        table
    }

    pub fn schubert(w: &Permutation) -> IntPoly {
        schubert_all(w.n())
            .remove(w.oneline())
            .expect("every permutation is reached")
    }
}

fn to_int_poly(p: &Polynomial) -> Option<classical::IntPoly> {
    let n = p.n();
    let mut out = BTreeMap::new();
    for (m, c) in p.terms() {
        if [Var::Alpha, Var::Beta, Var::Gamma]
            .iter()
            .any(|&v| m.exponent(v) > 0)
        {
            return None;
        }
        let e: Vec<u32> = (1..=n).map(|i| m.exponent(Var::X(i))).collect();
        out.insert(e, i64::try_from(c).ok()?);
    }
    Some(out)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecializationReport {
    pub n: usize,
    pub permutations: usize,
    pub schubert_agree: usize,
    pub grothendieck_agree: usize,
    pub dz_nonneg_integer: usize,
    pub lattice_agree: usize,
    pub failures: Vec<String>,
}

impl SpecializationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// For every `w ∈ S_n`:
/// `KN_w|_{α=β=γ=0} = 𝔖_{w0 w⁻¹}` (classical, computed independently),
/// `KN_w|_{α=γ=0} = T^{(-β, β, 0, 1, 0)}`-Schubert of `w0 w⁻¹`,
/// `DZ_w` has non-negative integer coefficients, and the lattice agrees with
/// the operators in each specialization.
pub fn specialization_crosschecks(n: usize) -> Result<SpecializationReport, AnalysisError> {
    if n > 4 {
        return Err(AnalysisError::TooLarge(n, 4));
    }
    let lambda = Partition::zero(n);
    let w0 = Permutation::longest(n);
    let classical = classical::schubert_all(n);
    let zero = ReducedParams::ints(0, 0, 0);
    let groth = ReducedParams::new(
        ddop::ParamExpr::int(0),
        ddop::ParamExpr::BETA,
        ddop::ParamExpr::int(0),
    );
    let dz = ReducedParams::dz();
    let beta_groth = GeneralParams::beta_grothendieck(n);
    let specs = [zero, groth, dz];
    let weights: Vec<BoltzmannWeights> = specs
        .iter()
        .map(|p| BoltzmannWeights::for_lattice(p, n))
        .collect();
    let perms = Permutation::all(n);
    let rows = perms
        .par_iter()
        .map(|w| -> Result<[bool; 4], AnalysisError> {
            let u = &w0 * &w.inverse();
            let kn: Vec<Polynomial> = specs
                .iter()
                .map(|p| ddop::kirillov_poly(w, &lambda, p))
                .collect::<Result<_, _>>()?;
            let boundary = lattice::system_for_kn(w, &lambda)?;
            let lattice_ok = weights
                .iter()
                .zip(&kn)
                .all(|(wt, k)| lattice::partition_function(&boundary, wt) == *k);
            let schubert_ok = to_int_poly(&kn[0]).as_ref() == Some(&classical[u.oneline()]);
            let groth_ok = ddop::generalized_schubert(&u, &beta_groth)? == kn[1];
            let dz_ok = kn[2].nonneg_report().all_nonneg && !has_parameters(&kn[2]);
            Ok([schubert_ok, groth_ok, dz_ok, lattice_ok])
        })
        .collect::<Result<Vec<_>, _>>()?;
    let count = |k: usize| rows.iter().filter(|r| r[k]).count();
    let labels = [
        "classical Schubert",
        "beta-Grothendieck",
        "DZ non-negativity",
        "lattice oracle",
    ];
    let failures = perms
        .iter()
        .zip(&rows)
        .flat_map(|(w, r)| {
            (0..4)
                .filter(|&k| !r[k])
                .map(move |k| format!("{}: {}", w.to_oneline_string(), labels[k]))
        })
        .collect();
    Ok(SpecializationReport {
        n,
        permutations: perms.len(),
        schubert_agree: count(0),
        grothendieck_agree: count(1),
        dz_nonneg_integer: count(2),
        lattice_agree: count(3),
        failures,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GammaDivisibilityReport {
    pub n: usize,
    pub lambda: Vec<u32>,
    pub states: u64,
    pub multicolor_states: u64,
    pub violations: Vec<Vec<usize>>,
}

/// Every state with a multi-color vertical edge has weight divisible by `γ`.
pub fn gamma_divisibility(
    n: usize,
    lambda: &Partition,
) -> Result<GammaDivisibilityReport, AnalysisError> {
    if n > MAX_SCAN_N {
        return Err(AnalysisError::TooLarge(n, MAX_SCAN_N));
    }
    let weights = BoltzmannWeights::for_lattice(&ReducedParams::symbolic(), n);
    let per: Vec<(Vec<usize>, u64, u64, bool)> = Permutation::all(n)
        .par_iter()
        .map(|w| -> Result<_, AnalysisError> {
            let b = lattice::system_for_kn(w, lambda)?;
            let states = lattice::count_states(&b, &weights) as u64;
            let (multi, ok) = gamma_divisibility_for(&b, &weights);
            Ok((w.oneline().to_vec(), states, multi, ok))
        })
        .collect::<Result<_, _>>()?;
    Ok(GammaDivisibilityReport {
        n,
        lambda: lambda.parts().to_vec(),
        states: per.iter().map(|p| p.1).sum(),
        multicolor_states: per.iter().map(|p| p.2).sum(),
        violations: per.into_iter().filter(|p| !p.3).map(|p| p.0).collect(),
    })
}

/// One-line forms of permutations given in cycle notation.
pub fn cycles_to_oneline(cycles: &[Vec<usize>], n: usize) -> Vec<usize> {
    Permutation::from_cycles(cycles, n)
        .expect("valid cycle notation")
        .oneline()
        .to_vec()
}
