//! Consistency checks tying the expansions to independent computations.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::{
    dominance_matrix, dominant_weights_below, freudenthal_multiplicities, layer_sum_matrix, orbit_sum_matrix,
    ordered_by_bound, ordered_upto, Expansion, OrderedWeightList, WeightMatrix,
};
use crate::algebra::Algebra;
use crate::error::{Counterexample, Error, Result};
use crate::fixtures;
use crate::layercalc::{count_weights_bruteforce, dim_at, weyl_alternating_dim_sum};
use crate::weight::Weight;
use crate::weylgroup::orbit_size;
use crate::Poly;

/// A family of checks selectable on the command line.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Check {
    /// Alternating Weyl sum of `D` equals `|W|`.
    SumW,
    /// Orbit-sum and layer-sum matrices are unit lower-triangular.
    Triangular,
    /// Orbit-sum expansion coefficients are integers.
    Integrality,
    /// Multiplicities and layer-decomposition coefficients are non-negative.
    Nonneg,
    /// Inverted orbit-sum rows agree with the Freudenthal recursion.
    Freudenthal,
    /// `R(lambda)` agrees with a direct count of weights.
    BruteCount,
    /// `C^{-1} M = D`, and the dimension and multiplicity identities built on it.
    Dominance,
    /// Computed `R` and `rho'` agree with the stored tables.
    Fixtures,
}

impl Check {
    pub const ALL: [Check; 8] = [
        Check::SumW,
        Check::Triangular,
        Check::Integrality,
        Check::Nonneg,
        Check::Freudenthal,
        Check::BruteCount,
        Check::Dominance,
        Check::Fixtures,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::SumW => "sumW",
            Check::Triangular => "triangular",
            Check::Integrality => "integrality",
            Check::Nonneg => "nonneg",
            Check::Freudenthal => "freudenthal",
            Check::BruteCount => "brute-count",
            Check::Dominance => "dominance",
            Check::Fixtures => "fixtures",
        }
    }

    /// Parse a comma-separated selection; `all` selects everything.
    pub fn parse_list(s: &str) -> std::result::Result<Vec<Check>, String> {
        let mut out = Vec::new();
        for tok in s.split(',').map(str::trim).filter(|t| !t.is_empty()) {
            if tok.eq_ignore_ascii_case("all") {
                out.extend(Check::ALL);
            } else {
                out.push(tok.parse()?);
            }
        }
        out.sort();
        out.dedup();
        Ok(out)
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Check {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Check::ALL.into_iter().find(|c| c.name().eq_ignore_ascii_case(s)).ok_or_else(|| format!("unknown check {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckResult {
    pub name: String,
    pub status: CheckStatus,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

/// `{"checks": [{"name", "status", "witness"?}]}`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.status != CheckStatus::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| c.status == CheckStatus::Fail)
    }

    fn record(&mut self, name: &str, outcome: Outcome) {
        let (status, witness) = match outcome {
            Outcome::Pass => (CheckStatus::Pass, None),
            Outcome::Fail(w) => (CheckStatus::Fail, Some(w)),
            Outcome::Skip(w) => (CheckStatus::Skip, Some(w)),
        };
        self.checks.push(CheckResult { name: name.to_string(), status, witness });
    }
}

enum Outcome {
    Pass,
    Fail(String),
    Skip(String),
}

impl Outcome {
    /// First failure over an iterator of per-weight outcomes.
    fn first_failure<I: IntoIterator<Item = Option<String>>>(it: I) -> Outcome {
        it.into_iter().flatten().next().map_or(Outcome::Pass, Outcome::Fail)
    }
}

/// The orbit-sum, layer-sum and dominance matrices over one ordering, with
/// their inverses.
#[derive(Clone, Debug)]
pub struct Tables {
    pub order: OrderedWeightList,
    /// Rows: orbit sums in characters.
    pub orbit_sums: WeightMatrix,
    /// Rows: characters in orbit sums (weight multiplicities).
    pub characters: WeightMatrix,
    /// Rows: layer sums in characters.
    pub layer_sums: WeightMatrix,
    /// Rows: characters in layer sums.
    pub layer_decompositions: WeightMatrix,
    pub dominance: WeightMatrix,
}

/// Which stage of [`Tables::build`] failed.
#[derive(Clone, Debug)]
pub enum BuildFailure {
    Orbit(Counterexample),
    Layer(Counterexample),
    Dominance(Counterexample),
}

impl Tables {
    pub fn build(alg: &Algebra, order: &OrderedWeightList) -> Result<std::result::Result<Tables, BuildFailure>> {
        let orbit_sums = match split(orbit_sum_matrix(alg, order))? {
            Ok(m) => m,
            Err(c) => return Ok(Err(BuildFailure::Orbit(c))),
        };
        let layer_sums = match split(layer_sum_matrix(alg, order))? {
            Ok(m) => m,
            Err(c) => return Ok(Err(BuildFailure::Layer(c))),
        };
        let dominance = match split(dominance_matrix(alg.root_system(), order))? {
            Ok(m) => m,
            Err(c) => return Ok(Err(BuildFailure::Dominance(c))),
        };
        Ok(Ok(Tables {
            order: order.clone(),
            characters: orbit_sums.inverse(),
            layer_decompositions: layer_sums.inverse(),
            orbit_sums,
            layer_sums,
            dominance,
        }))
    }

    pub fn character(&self, i: usize) -> Expansion {
        self.characters.row_expansion(i)
    }

    pub fn layer_decomposition(&self, i: usize) -> Expansion {
        self.layer_decompositions.row_expansion(i)
    }
}

/// Separate counterexamples from usage errors.
fn split<T>(r: Result<T>) -> Result<std::result::Result<T, Counterexample>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::Counterexample(c)) => Ok(Err(*c)),
        Err(e) => Err(e),
    }
}

/// Run `checks` for the single highest weight `lambda`.
pub fn verify_identities(alg: &Algebra, lambda: &Weight, checks: &[Check]) -> Result<VerifyReport> {
    let order = ordered_upto(alg, lambda)?;
    verify_weights(alg, &order, std::slice::from_ref(lambda), checks)
}

/// Run `checks` for every dominant `mu` below `lambda` in the dominance order.
pub fn verify_upto(alg: &Algebra, lambda: &Weight, checks: &[Check]) -> Result<VerifyReport> {
    let order = ordered_upto(alg, lambda)?;
    let targets: Vec<Weight> = dominant_weights_below(alg.root_system(), lambda).into_iter().collect();
    verify_weights(alg, &order, &targets, checks)
}

/// Run `checks` for every dominant weight with `R <= bound`.
pub fn verify_bound(alg: &Algebra, bound: &BigRational, checks: &[Check]) -> Result<VerifyReport> {
    let order = ordered_by_bound(alg.root_system(), &alg.layer_polynomial()?.poly, bound)?;
    verify_weights(alg, &order, order.weights(), checks)
}

fn verify_weights(
    alg: &Algebra,
    order: &OrderedWeightList,
    targets: &[Weight],
    checks: &[Check],
) -> Result<VerifyReport> {
    let rs = alg.root_system();
    let r = &alg.layer_polynomial()?.poly;
    let mut report = VerifyReport::default();
    let wants = |c: Check| checks.contains(&c);

    if wants(Check::Fixtures) {
        report.record("fixtures:layer-polynomial", fixture_layer_outcome(alg, r));
        report.record("fixtures:rho-prime", fixture_rho_outcome(alg));
    }
    if wants(Check::SumW) {
        let group = alg.group()?;
        let order = BigRational::from_integer(alg.weyl_order().into());
        report.record(
            "sumW",
            Outcome::first_failure(targets.iter().map(|mu| {
                let s = weyl_alternating_dim_sum(rs, mu, group);
                (s != order).then(|| format!("at {mu}: sum is {s}, expected {order}"))
            })),
        );
    }
    if wants(Check::BruteCount) {
        report.record(
            "brute-count",
            Outcome::first_failure(targets.iter().map(|mu| {
                let n = BigRational::from_integer(count_weights_bruteforce(rs, mu).into());
                let v = r.eval_int(mu.labels());
                (n != v).then(|| format!("at {mu}: R = {v}, count = {n}"))
            })),
        );
    }

    let matrix_checks = [Check::Triangular, Check::Integrality, Check::Nonneg, Check::Freudenthal, Check::Dominance];
    if !matrix_checks.iter().any(|&c| wants(c)) {
        return Ok(report);
    }

    let tables = match Tables::build(alg, order)? {
        Ok(t) => t,
        Err(failure) => {
            record_build_failure(&mut report, &failure, &wants);
            return Ok(report);
        }
    };
    if wants(Check::Triangular) {
        report.record("triangular", Outcome::Pass);
    }
    if wants(Check::Integrality) {
        report.record("integrality", Outcome::Pass);
    }

    let mut rows = Vec::with_capacity(targets.len());
    for mu in targets {
        match tables.order.position(mu) {
            Some(i) => rows.push((i, mu)),
            None => {
                let top = order.weights().last().expect("a target exists");
                report.record("dominance:R-monotone", Outcome::Fail(format!("{mu} < {top} but R({mu}) > R({top})")));
                return Ok(report);
            }
        }
    }

    if wants(Check::Nonneg) {
        report.record(
            "nonneg:multiplicities",
            Outcome::first_failure(rows.iter().map(|&(i, mu)| {
                tables.character(i).iter().find(|(_, &c)| c < 0).map(|(w, c)| format!("m at {w} in ch{mu} is {c}"))
            })),
        );
        report.record(
            "nonneg:layer-decomposition",
            Outcome::first_failure(rows.iter().map(|&(i, mu)| {
                tables.layer_decomposition(i).iter().find_map(|(w, &c)| {
                    if c < 0 {
                        Some(format!("c at {w} in ch{mu} is {c}"))
                    } else if !rs.dominated_by(w, mu) {
                        Some(format!("ch{mu} has layer sum at {w} outside P+({mu})"))
                    } else {
                        None
                    }
                })
            })),
        );
    }
    if wants(Check::Freudenthal) {
        report.record(
            "freudenthal",
            Outcome::first_failure(rows.iter().map(|&(i, mu)| {
                let inv = tables.character(i);
                let fr = freudenthal_multiplicities(rs, mu);
                (inv != fr).then(|| first_difference(mu, &inv, &fr))
            })),
        );
    }
    if wants(Check::Dominance) {
        dominance_checks(alg, r, &tables, &rows, &mut report);
    }
    Ok(report)
}

fn record_build_failure(report: &mut VerifyReport, failure: &BuildFailure, wants: &dyn Fn(Check) -> bool) {
    let (culprit, cex) = match failure {
        BuildFailure::Orbit(c) if c.identity.contains("integrality") => (Check::Integrality, c),
        BuildFailure::Orbit(c) | BuildFailure::Layer(c) => (Check::Triangular, c),
        BuildFailure::Dominance(c) => (Check::Dominance, c),
    };
    for check in [Check::Triangular, Check::Integrality, Check::Nonneg, Check::Freudenthal, Check::Dominance] {
        if check == culprit {
            report.record(check.name(), Outcome::Fail(cex.to_string()));
        } else if wants(check) {
            report.record(check.name(), Outcome::Skip(format!("not reached: {cex}")));
        }
    }
}

fn first_difference(mu: &Weight, a: &Expansion, b: &Expansion) -> String {
    let w = a.support().chain(b.support()).find(|w| a.coeff(w) != b.coeff(w)).expect("expansions differ");
    format!("ch{mu} at {w}: inversion gives {}, Freudenthal gives {}", a.coeff(w), b.coeff(w))
}

fn dominance_checks(alg: &Algebra, r: &Poly, t: &Tables, rows: &[(usize, &Weight)], report: &mut VerifyReport) {
    let rs = alg.root_system();
    let n = t.order.len();
    let weights = t.order.weights();

    // C^{-1} M = D on the rows under test
    report.record(
        "dominance:CinvM=D",
        Outcome::first_failure(rows.iter().map(|&(i, mu)| {
            (0..n).find_map(|j| {
                let v: i64 = (j..=i).map(|k| t.layer_sums.matrix.get(i, k) * t.characters.matrix.get(k, j)).sum();
                (v != t.dominance.matrix.get(i, j)).then(|| format!("row {mu}, column {}: {v}", weights[j]))
            })
        })),
    );
    // mu < lambda implies R(mu) < R(lambda)
    report.record(
        "dominance:R-monotone",
        Outcome::first_failure(rows.iter().map(|&(i, mu)| {
            (0..i).find_map(|j| {
                (t.dominance.matrix.get(i, j) == 1 && t.order.r_values()[j] >= t.order.r_values()[i]).then(|| {
                    format!(
                        "{} < {mu} but R values are {} and {}",
                        weights[j],
                        t.order.r_values()[j],
                        t.order.r_values()[i]
                    )
                })
            })
        })),
    );
    // m_{lambda,mu} = sum over nu in [mu, lambda] of c_{lambda,nu}
    report.record(
        "dominance:m-from-c",
        Outcome::first_failure(rows.iter().map(|&(i, lambda)| {
            (0..=i).find_map(|j| {
                let m = t.characters.matrix.get(i, j);
                let s: i64 =
                    (j..=i).map(|k| t.layer_decompositions.matrix.get(i, k) * t.dominance.matrix.get(k, j)).sum();
                (m != s).then(|| format!("ch{lambda} at {}: m = {m}, sum of c = {s}", weights[j]))
            })
        })),
    );
    // sum_mu m_{lambda,mu} |O_mu| = D(lambda)
    report.record(
        "dominance:dim-orbits",
        Outcome::first_failure(rows.iter().map(|&(i, lambda)| {
            let s: i64 = (0..=i).map(|j| t.characters.matrix.get(i, j) * orbit_size(rs, &weights[j]) as i64).sum();
            let d = dim_at(rs, lambda);
            (BigRational::from_integer(s.into()) != d).then(|| format!("ch{lambda}: orbit count {s}, D = {d}"))
        })),
    );
    // sum_mu c_{lambda,mu} R(mu) = D(lambda)
    report.record(
        "dominance:dim-layers",
        Outcome::first_failure(rows.iter().map(|&(i, lambda)| {
            let s = (0..=i).fold(BigRational::from_integer(0.into()), |acc, j| {
                acc + BigRational::from_integer(t.layer_decompositions.matrix.get(i, j).into())
                    * r.eval_int(weights[j].labels())
            });
            let d = dim_at(rs, lambda);
            (s != d).then(|| format!("ch{lambda}: layer count {s}, D = {d}"))
        })),
    );
}

fn fixture_layer_outcome(alg: &Algebra, got: &Poly) -> Outcome {
    let lt = alg.root_system().lie_type();
    match fixtures::lookup(lt) {
        None => Outcome::Skip(format!("no stored layer polynomial for {lt}")),
        Some(f) => {
            let want = f.layer_polynomial();
            if &want == got {
                Outcome::Pass
            } else {
                Outcome::Fail(format!(
                    "{lt}: computed {} terms, stored {} (difference {})",
                    got.num_terms(),
                    want.num_terms(),
                    got - &want
                ))
            }
        }
    }
}

fn fixture_rho_outcome(alg: &Algebra) -> Outcome {
    let rs = alg.root_system();
    let lt = rs.lie_type();
    match fixtures::lookup(lt) {
        None => Outcome::Skip(format!("no stored reduced Weyl vector for {lt}")),
        Some(f) => {
            let got = rs.to_root_basis_rational(rs.rho_prime());
            let want = f.rho_prime_root_coords();
            if got == want {
                Outcome::Pass
            } else {
                Outcome::Fail(format!("{lt}: computed {got:?}, stored {want:?}"))
            }
        }
    }
}
