//! End-to-end acceptance run. Prints one line per criterion and exits
//! non-zero if any fails.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use layerlie::charcalc::{
    freudenthal_multiplicities, orbit_sum_expansion, ordered_by_bound, ordered_upto, Expansion, Tables,
};
use layerlie::fixtures;
use layerlie::layercalc::{count_weights_bruteforce, dim_at, weyl_alternating_dim_sum};
use layerlie::weylgroup::{shifted_resolve, weyl_images, AuxResolution, DEFAULT_MAX_ORDER};
use layerlie::{Algebra, Rational, Weight};
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

const PRINTED_TYPES: [&str; 13] = ["A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"];

fn alg(t: &str) -> Algebra {
    Algebra::from_token(t).expect("valid token")
}

fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

fn w(labels: &[i64]) -> Weight {
    Weight::new(labels.to_vec())
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn random_weight(rng: &mut ChaCha8Rng, rank: usize) -> Weight {
    Weight::new((0..rank).map(|_| rng.gen_range(-10..=10)).collect())
}

fn layer_polynomial_fixtures() -> Outcome {
    for t in PRINTED_TYPES {
        let a = alg(t);
        let f = fixtures::lookup(a.root_system().lie_type()).ok_or(format!("{t}: no fixture"))?;
        let lp = a.layer_polynomial().unwrap();
        ensure(lp.poly == f.layer_polynomial(), || {
            format!("{t}: computed R differs: {}", &lp.poly - &f.layer_polynomial())
        })?;
        ensure(lp.report.conforms(), || format!("{t}: {:?}", lp.report))?;
    }
    Ok(())
}

fn reduced_weyl_vectors() -> Outcome {
    for t in PRINTED_TYPES {
        let a = alg(t);
        let rs = a.root_system();
        let f = fixtures::lookup(rs.lie_type()).ok_or(format!("{t}: no fixture"))?;
        let got = rs.to_root_basis_rational(rs.rho_prime());
        ensure(got == f.rho_prime_root_coords(), || format!("{t}: rho' = {got:?}"))?;
    }
    let g2 = alg("G2");
    let labels = g2.root_system().rho_prime().labels().to_vec();
    ensure(labels == [Rational::new(1.into(), 2.into()), Rational::new(3.into(), 2.into())], || {
        format!("G2 rho' labels {labels:?}")
    })
}

fn g2_worked_example() -> Outcome {
    let g2 = alg("G2");
    let order = ordered_upto(&g2, &w(&[2, 2])).map_err(|e| e.to_string())?;
    let want_order: Vec<Weight> = common::ORDER.iter().map(|l| w(l)).collect();
    ensure(order.weights() == want_order.as_slice(), || format!("ordering {:?}", order.weights()))?;
    let t = Tables::build(&g2, &order).map_err(|e| e.to_string())?.map_err(|f| format!("{f:?}"))?;
    let as_rows = |m: &[[i64; 14]; 14]| m.iter().map(|r| r.to_vec()).collect::<Vec<_>>();
    let checks = [
        ("orbit-sum matrix", t.orbit_sums.matrix.to_square(), as_rows(&common::ORBIT_SUMS)),
        ("character rows", t.characters.matrix.to_square(), as_rows(&common::CHARACTERS)),
        ("layer-sum matrix", t.layer_sums.matrix.to_square(), as_rows(&common::LAYER_SUMS)),
        ("layer decompositions", t.layer_decompositions.matrix.to_square(), as_rows(&common::LAYER_DECOMPOSITIONS)),
        ("C^-1 M", t.layer_sums.matrix.mul(&t.characters.matrix).to_square(), as_rows(&common::DOMINANCE)),
        ("dominance matrix", t.dominance.matrix.to_square(), as_rows(&common::DOMINANCE)),
    ];
    for (name, got, want) in checks {
        if let Some(i) = (0..14).find(|&i| got[i] != want[i]) {
            return Err(format!("{name}: row {} is {:?}, printed {:?}", i + 1, got[i], want[i]));
        }
    }
    ensure(t.dominance.matrix.get(12, 11) == 0, || "dominance (13,12) is not zero".into())
}

fn paper_scalars() -> Outcome {
    let g2 = alg("G2");
    let rs = g2.root_system();
    let r = &g2.layer_polynomial().unwrap().poly;
    let l = w(&[1, 1]);
    ensure(dim_at(rs, &l) == int(64), || "dim L(w1+w2) != 64".into())?;
    ensure(g2.dim_polynomial().unwrap().eval_int(l.labels()) == int(64), || "D(1,1) != 64".into())?;
    let dec = layerlie::charcalc::layer_decomposition(&g2, &l).map_err(|e| e.to_string())?;
    let summands: Vec<(Rational, i64)> = dec.iter().map(|(mu, &c)| (r.eval_int(mu.labels()), c)).collect();
    let want = vec![(int(7), 2), (int(19), 1), (int(31), 1)];
    ensure(summands == want, || format!("layer summands {summands:?}"))?;
    let top = layerlie::charcalc::character_in_orbit_basis(&g2, &w(&[2, 2])).map_err(|e| e.to_string())?;
    ensure(top.coeff(&w(&[0, 0])) == 21, || format!("m at 0 is {}", top.coeff(&w(&[0, 0]))))?;
    let row = layerlie::charcalc::character_in_orbit_basis(&g2, &w(&[2, 1])).map_err(|e| e.to_string())?;
    ensure(row.coeff(&w(&[1, 0])) == 7, || format!("m at w1 is {}", row.coeff(&w(&[1, 0]))))?;

    let b2 = alg("B2");
    let e = orbit_sum_expansion(b2.root_system(), &w(&[0, 2]), b2.weyl_table().map_err(|e| e.to_string())?)
        .map_err(|e| e.to_string())?;
    let want = Expansion::from_pairs([(w(&[0, 2]), 1), (w(&[1, 0]), -1), (w(&[0, 0]), -1)]);
    ensure(e == want, || format!("B2 orbit sum m_(0,2) = {e:?}"))?;

    let cases = [
        ([3, -6], AuxResolution::Signed { sign: 1, dominant: w(&[0, 1]) }),
        ([-4, 4], AuxResolution::Signed { sign: -1, dominant: w(&[0, 0]) }),
        ([-3, 1], AuxResolution::Zero),
    ];
    for (aux, want) in cases {
        let got = shifted_resolve(rs, &w(&aux));
        ensure(got == want, || format!("resolution of {aux:?} is {got:?}"))?;
    }
    Ok(())
}

fn alternating_weyl_sum() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0005);
    for t in PRINTED_TYPES {
        let a = alg(t);
        let group = a.group().map_err(|e| e.to_string())?;
        let order = int(a.weyl_order() as i64);
        for _ in 0..100 {
            let lambda = random_weight(&mut rng, a.rank());
            let s = weyl_alternating_dim_sum(a.root_system(), &lambda, group);
            ensure(s == order, || format!("{t} at {lambda}: sum {s}, |W| = {order}"))?;
        }
    }
    Ok(())
}

const SWEEPS: [(&str, i64); 6] = [("A2", 200), ("B2", 200), ("G2", 200), ("A3", 120), ("B3", 120), ("C3", 120)];

fn sweep_tables(t: &str, bound: i64) -> Result<(Algebra, Tables), String> {
    let a = alg(t);
    let order = ordered_by_bound(a.root_system(), &a.layer_polynomial().unwrap().poly, &int(bound))
        .map_err(|e| e.to_string())?;
    let tables = match Tables::build(&a, &order) {
        Ok(Ok(tables)) => tables,
        Ok(Err(failure)) => return Err(format!("{t}: counterexample {failure:?}")),
        Err(e) => return Err(format!("{t}: {e}")),
    };
    Ok((a, tables))
}

fn oracle_equivalence() -> Outcome {
    for (t, bound) in SWEEPS {
        let (a, tables) = sweep_tables(t, bound)?;
        for (i, lambda) in tables.order.weights().iter().enumerate() {
            let fr = freudenthal_multiplicities(a.root_system(), lambda);
            ensure(tables.character(i) == fr, || format!("{t} at {lambda}: {:?} vs {fr:?}", tables.character(i)))?;
        }
    }
    Ok(())
}

fn brute_force_counts() -> Outcome {
    for (t, max_sum) in [("A2", 8), ("A3", 8), ("B2", 8), ("G2", 8), ("B3", 5), ("C3", 5)] {
        let a = alg(t);
        let r = &a.layer_polynomial().unwrap().poly;
        for lambda in labels_with_sum_at_most(a.rank(), max_sum) {
            let n = count_weights_bruteforce(a.root_system(), &lambda);
            ensure(r.eval_int(lambda.labels()) == int(n as i64), || format!("{t} at {lambda}: count {n}"))?;
        }
    }
    Ok(())
}

fn labels_with_sum_at_most(rank: usize, max: i64) -> Vec<Weight> {
    let mut out = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                let used: i64 = v.iter().sum();
                (0..=max - used).map(move |x| {
                    let mut v = v.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(Weight::new).collect()
}

fn conjecture_sweeps() -> Outcome {
    for (t, bound) in SWEEPS {
        // unitriangularity and integrality are enforced while building
        let (a, tables) = sweep_tables(t, bound)?;
        for (i, lambda) in tables.order.weights().iter().enumerate() {
            for (mu, &c) in tables.layer_decomposition(i).iter() {
                ensure(c >= 0, || format!("{t}: c at {mu} in ch{lambda} is {c}"))?;
                ensure(a.root_system().dominated_by(mu, lambda), || format!("{t}: {mu} outside P+({lambda})"))?;
            }
            for (mu, &c) in tables.character(i).iter() {
                ensure(c >= 0, || format!("{t}: m at {mu} in ch{lambda} is {c}"))?;
            }
        }
    }
    Ok(())
}

fn binomial(n: i64, k: i64) -> i64 {
    (1..=k).fold(1, |acc, i| acc * (n - k + i) / i)
}

fn specializations() -> Outcome {
    for r in 1..=5usize {
        let a = alg(&format!("A{r}"));
        let p = &a.layer_polynomial().unwrap().poly;
        for n in 0..=20 {
            let mut l = vec![0; r];
            l[0] = n;
            let want = int(binomial(r as i64 + n, r as i64));
            ensure(p.eval_int(&l) == want, || format!("A{r} at {n}w1"))?;
            l[0] = 0;
            l[r - 1] = n;
            ensure(p.eval_int(&l) == want, || format!("A{r} at {n}w{r}"))?;
        }
    }
    for r in 2..=4usize {
        let a = alg(&format!("B{r}"));
        let p = &a.layer_polynomial().unwrap().poly;
        for n in 0..=20 {
            let mut l = vec![0; r];
            l[r - 1] = n;
            ensure(p.eval_int(&l) == int((1 + n).pow(r as u32)), || format!("B{r} at {n}w{r}"))?;
        }
    }
    let g2 = alg("G2");
    let p = &g2.layer_polynomial().unwrap().poly;
    for l1 in 0..50 {
        for l2 in 0..50 {
            let v = p.eval_int(&[l1, l2]);
            ensure(v.is_integer() && (v.to_integer() - BigInt::from(1)) % 6 == BigInt::from(0), || {
                format!("G2 at ({l1},{l2}): {v}")
            })?;
        }
    }
    Ok(())
}

fn dimension_sign_law() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0010);
    for t in ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C3", "C4", "D4", "F4", "G2"] {
        let a = alg(t);
        let rs = a.root_system();
        let rho = rs.rho();
        for k in 0..100 {
            let lambda = random_weight(&mut rng, a.rank());
            let d = dim_at(rs, &lambda);
            if k < 3 {
                ensure(a.dim_polynomial().unwrap().eval_int(lambda.labels()) == d, || format!("{t}: D at {lambda}"))?;
            }
            for (image, len) in weyl_images(rs, &(&lambda + &rho), DEFAULT_MAX_ORDER).map_err(|e| e.to_string())? {
                let shifted = &image - &rho;
                let want = if len % 2 == 0 { d.clone() } else { -d.clone() };
                ensure(dim_at(rs, &shifted) == want, || format!("{t}: D({shifted}) vs D({lambda})"))?;
            }
        }
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("layer-polynomial fixtures for the thirteen printed algebras", layer_polynomial_fixtures),
        ("reduced Weyl vectors", reduced_weyl_vectors),
        ("G2 worked example: 14x14 matrices, characters, decompositions", g2_worked_example),
        ("printed scalars and auxiliary resolutions", paper_scalars),
        ("alternating Weyl sum of D equals |W|", alternating_weyl_sum),
        ("inversion multiplicities equal Freudenthal", oracle_equivalence),
        ("layer polynomial equals brute-force weight count", brute_force_counts),
        ("unitriangularity, integrality and non-negativity sweeps", conjecture_sweeps),
        ("specializations of R", specializations),
        ("sign law D(w.l) = (-1)^l(w) D(l)", dimension_sign_law),
    ];
    let mut failures = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("PASS {:>2}  {name}  ({secs:.1}s)", i + 1),
            Err(why) => {
                failures += 1;
                println!("FAIL {:>2}  {name}  ({secs:.1}s): {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failures, criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
