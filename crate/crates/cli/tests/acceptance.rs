//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use csmcalc::charclass::{
    cfj_complete_intersection, codimension, compute_csm, csm_ci_direct, csm_from_gradient_degrees,
    is_smooth, milnor_from_classes, monomials_of_degree, projective_degrees, segre_class,
    segre_complete_intersection, CsmAlgorithm, Settings,
};
use csmcalc::probability::{
    degree_bound, probability_bound, projective_degree_success_bound, segre_success_bound,
};
use csmcalc::{ChowClass, Error, FieldSpec, Ideal, Polynomial, Ring, SeededRng};
use csmcalc_cli::fixtures;
use csmcalc_cli::run::{load_input, run, stress, Algorithm, Output, RunConfig};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

type Outcome = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn class(n: usize, c: &[i64]) -> ChowClass {
    ChowClass::from_coeffs(n, c.iter().copied())
}

fn fixture(name: &str) -> Ideal {
    load_input(name, None).unwrap().ideal
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let t = start.elapsed();
    if t > limit {
        return Err(format!(
            "{what} took {:.1} s, over the {} s budget",
            t.as_secs_f64(),
            limit.as_secs()
        ));
    }
    Ok(())
}

fn verified() -> Settings {
    Settings {
        verify: true,
        ..Settings::default()
    }
}

fn random_form(r: &Arc<Ring>, deg: u32, rng: &mut SeededRng) -> Polynomial {
    let p = r.field().modulus();
    Polynomial::from_terms(
        r,
        monomials_of_degree(r.ngens(), deg)
            .into_iter()
            .map(|m| (m, rng.scalar(p) as i64)),
    )
}

/// Smooth complete intersections with at most three generators of degree at
/// most three in `P^n`, `n <= 5`, drawn from a fixed seed.
fn random_smooth_cis(count: usize) -> Vec<(usize, Vec<u32>, Ideal)> {
    let mut rng = SeededRng::new(2024);
    let mut out = Vec::new();
    while out.len() < count {
        let n = 2 + rng.scalar(4) as usize;
        let r = 1 + rng.scalar(3.min(n as u32)) as usize;
        let degrees: Vec<u32> = (0..r).map(|_| 1 + rng.scalar(3)).collect();
        let ring = Ring::projective(FieldSpec::default(), n).unwrap();
        let id = Ideal::new(
            &ring,
            degrees
                .iter()
                .map(|&d| random_form(&ring, d, &mut rng))
                .collect(),
        )
        .unwrap();
        if codimension(&id) == r && is_smooth(&id).unwrap() {
            out.push((n, degrees, id));
        }
    }
    out
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let input = load_input("quadric", None).unwrap();
    let r = run(
        &RunConfig {
            seed: 1,
            ..RunConfig::default()
        },
        &input,
    )
    .map_err(|e| e.to_string())?;
    let Output::Classes(rep) = r.output else {
        return Err("no class report".into());
    };
    within(start, Duration::from_secs(5), "quadric")?;
    ensure!(rep.csm == class(3, &[0, 2, 4, 4]), "csm = {}", rep.csm);
    ensure!(rep.euler == BigInt::from(4), "chi = {}", rep.euler);
    let want: Vec<BigInt> = [4, 2, 2].into_iter().map(BigInt::from).collect();
    ensure!(
        rep.profile.values == want,
        "profile = {:?}",
        rep.profile.values
    );
    Ok(format!("csm {} chi 4 profile (4,2,2)", rep.csm))
}

fn criterion_2() -> Outcome {
    let mut notes = Vec::new();
    for (name, want) in [
        ("s52_V2", [0, 0, 9, 54, -1944]),
        ("s52_V3", [0, 0, 36, -432, 3888]),
    ] {
        let start = Instant::now();
        let input = load_input(name, None).unwrap();
        let cfg = RunConfig {
            seed: 1,
            algorithm: Algorithm::SegreOnly,
            ..RunConfig::default()
        };
        let r = run(&cfg, &input).map_err(|e| e.to_string())?;
        let Output::Segre(s) = r.output else {
            return Err("no Segre class".into());
        };
        within(start, Duration::from_secs(60), name)?;
        ensure!(s == class(4, &want), "{name}: segre = {s}");
        notes.push(format!("{name} {s}"));
    }
    Ok(notes.join("; "))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    let mut cases = random_smooth_cis(18);
    cases.push((4, vec![2, 2], fixture("s52_V1q")));
    cases.push((4, vec![6, 6], fixture("s52_V1")));
    for (k, (n, degrees, id)) in cases.iter().enumerate() {
        let s =
            segre_class(id, &verified(), &SeededRng::new(k as u64)).map_err(|e| e.to_string())?;
        let want = segre_complete_intersection(degrees, *n);
        ensure!(s == want, "{degrees:?} in P^{n}: {s} instead of {want}");
    }
    ensure!(
        segre_complete_intersection(&[2, 2], 4) == class(4, &[0, 0, 4, -16, 48]),
        "two quadrics closed form"
    );
    ensure!(
        segre_complete_intersection(&[6, 6], 4) == class(4, &[0, 0, 36, -432, 3888]),
        "two sextics closed form"
    );
    within(start, Duration::from_secs(120), "20 complete intersections")?;
    Ok(format!(
        "{} smooth complete intersections, shortcut disabled",
        cases.len()
    ))
}

fn criterion_4() -> Outcome {
    let mut checked = 0;
    for name in fixtures::names() {
        let id = fixture(name);
        let codim = codimension(&id);
        let slow = projective_degrees(&id, &verified(), &SeededRng::new(4))
            .map_err(|e| format!("{name}: {e}"))?;
        let bad = slow.invariant_violations(codim);
        ensure!(bad.is_empty(), "{name}: {}", bad.join(", "));
        ensure!(slow.g[0] == 1, "{name}: g_0 = {}", slow.g[0]);
        let fast = projective_degrees(&id, &Settings::default(), &SeededRng::new(5))
            .map_err(|e| e.to_string())?;
        ensure!(
            fast == slow,
            "{name}: shortcut {:?} vs computed {:?}",
            fast.g,
            slow.g
        );
        checked += 1;
    }
    Ok(format!("{checked} fixtures"))
}

/// Sum of Milnor numbers from the stable Hilbert function of the gradient
/// ideal (Tjurina numbers, equal to Milnor numbers for these singularities).
fn total_milnor(grad: &Ideal) -> u64 {
    let leads = grad.groebner().leading_monomials();
    let h = |k: u32| {
        monomials_of_degree(3, k)
            .iter()
            .filter(|m| !leads.iter().any(|l| l.divides(m)))
            .count() as u64
    };
    assert_eq!(h(20), h(21), "Hilbert function not stable");
    h(20)
}

fn criterion_5() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (name, want, chi) in [
        ("conic", [1, 1, 1], 2),
        ("cusp", [1, 2, 2], 2),
        ("node", [1, 2, 3], 1),
    ] {
        let id = fixture(name);
        let f = &id.generators()[0];
        let d = f.total_degree().unwrap() as u64;
        let grad: Vec<Polynomial> = (0..3)
            .map(|j| f.partial_derivative(j).unwrap())
            .filter(|g| !g.is_zero())
            .collect();
        let grad = Ideal::new(id.ring(), grad).unwrap();
        let pd = projective_degrees(&grad, &verified(), &SeededRng::new(5))
            .map_err(|e| e.to_string())?;
        ensure!(pd.g == want, "{name}: gradient degrees {:?}", pd.g);
        let mu = total_milnor(&grad);
        ensure!(
            pd.g[2] == (d - 1).pow(2) - mu,
            "{name}: top degree {} vs (d-1)^2 - mu = {}",
            pd.g[2],
            (d - 1).pow(2) - mu
        );
        let csm = csm_from_gradient_degrees(&pd.g, 2);
        ensure!(
            *csm.degree_zero_part() == BigInt::from(chi),
            "{name}: chi = {}",
            csm.degree_zero_part()
        );
        notes.push(format!("{name} {:?} chi {chi}", pd.g));
    }
    within(start, Duration::from_secs(10), "plane curves")?;
    Ok(notes.join("; "))
}

const AGREEMENT_SET: &[&str] = &[
    "t41_V1", "t41_V2", "t41_V3", "t41_V4", "t41_V5", "t41_V8", "t41_V9", "s52_V1", "s52_V1q",
    "s52_V2", "s52_V3",
];

fn criterion_6() -> Outcome {
    let start = Instant::now();
    let s = Settings::default();
    let mut direct_runs = 0;
    for name in AGREEMENT_SET {
        let id = fixture(name);
        let rng = SeededRng::new(6);
        let hybrid = compute_csm(&id, CsmAlgorithm::Hybrid, &s, &rng)
            .map_err(|e| format!("{name} hybrid: {e}"))?;
        let ie = compute_csm(&id, CsmAlgorithm::InclusionExclusion, &s, &rng)
            .map_err(|e| format!("{name} incl-excl: {e}"))?;
        ensure!(
            hybrid.csm == ie.csm,
            "{name}: hybrid {} vs incl-excl {}",
            hybrid.csm,
            ie.csm
        );
        match compute_csm(&id, CsmAlgorithm::Direct, &s, &rng) {
            Ok(d) => {
                ensure!(
                    d.csm == hybrid.csm,
                    "{name}: direct {} vs hybrid {}",
                    d.csm,
                    hybrid.csm
                );
                direct_runs += 1;
            }
            Err(Error::NotCompleteIntersection { .. } | Error::NoSmoothOrdering) => {}
            Err(e) => return Err(format!("{name} direct: {e}")),
        }
    }
    within(start, Duration::from_secs(600), "agreement sweep")?;
    Ok(format!(
        "{} fixtures, direct applicable on {direct_runs}",
        AGREEMENT_SET.len()
    ))
}

fn criterion_7() -> Outcome {
    let mut cases = random_smooth_cis(10);
    for name in ["s52_V1", "s52_V1q"] {
        let id = fixture(name);
        cases.push((4, id.degrees().unwrap(), id));
    }
    for (k, (n, degrees, id)) in cases.iter().enumerate() {
        let r = csm_ci_direct(id, &Settings::default(), &SeededRng::new(k as u64))
            .map_err(|e| e.to_string())?;
        let cfj = cfj_complete_intersection(degrees, *n);
        ensure!(
            r.csm == cfj,
            "{degrees:?} in P^{n}: direct {} vs cfj {cfj}",
            r.csm
        );
        ensure!(
            r.milnor.is_zero(),
            "{degrees:?} in P^{n}: Milnor class {}",
            r.milnor
        );
    }
    Ok(format!("{} smooth complete intersections", cases.len()))
}

fn criterion_8() -> Outcome {
    let mut checked = Vec::new();
    for name in fixtures::names() {
        let id = fixture(name);
        let codim = codimension(&id);
        if codim != id.len() {
            continue;
        }
        let rep = compute_csm(
            &id,
            CsmAlgorithm::Auto,
            &Settings::default(),
            &SeededRng::new(8),
        )
        .map_err(|e| e.to_string())?;
        let (Some(cfj), Some(milnor)) = (&rep.cfj, &rep.milnor) else {
            return Err(format!("{name}: report lacks cfj or milnor"));
        };
        let n = id.ring().n();
        ensure!(
            *cfj == cfj_complete_intersection(&id.degrees().unwrap(), n),
            "{name}: cfj {cfj}"
        );
        ensure!(
            *milnor == milnor_from_classes(cfj, &rep.csm, codim),
            "{name}: milnor {milnor}"
        );
        if let Ok(d) = csm_ci_direct(&id, &Settings::default(), &SeededRng::new(9)) {
            ensure!(
                d.milnor == *milnor,
                "{name}: direct Milnor {} vs reported {milnor}",
                d.milnor
            );
        }
        checked.push(name);
    }
    ensure!(
        checked.len() >= 8,
        "only {} complete-intersection fixtures",
        checked.len()
    );
    Ok(format!("{} CI fixtures", checked.len()))
}

fn criterion_9() -> Outcome {
    let start = Instant::now();
    let mut notes = Vec::new();
    for (name, want) in [
        ("s52_V2", [0, 0, 9, 54, -1944]),
        ("s52_V3", [0, 0, 36, -432, 3888]),
    ] {
        let input = load_input(name, None).unwrap();
        let cfg = RunConfig {
            seed: 9,
            algorithm: Algorithm::SegreOnly,
            ..RunConfig::default()
        };
        let r = stress(&input, 100, Some(class(4, &want)), &cfg).map_err(|e| e.to_string())?;
        ensure!(
            r.failures == 0,
            "{name}: {} of {} runs wrong",
            r.failures,
            r.trials
        );
        notes.push(format!("{name} 0/100"));
    }
    within(start, Duration::from_secs(600), "stress")?;
    Ok(notes.join("; "))
}

fn criterion_10() -> Outcome {
    let one = BigRational::one();
    // Bound tends to 1.
    let huge = BigInt::from(10).pow(60);
    let b = probability_bound(4, 2, 6, 2, &huge);
    let eps = BigRational::new(BigInt::one(), BigInt::from(10).pow(9));
    ensure!(
        &one - &b.segre < eps,
        "segre bound at |S| = 10^60 is {}",
        b.segre
    );
    ensure!(
        b.per_degree.iter().all(|x| &one - x < eps),
        "degree bounds not near 1"
    );
    // Monotone in |S|.
    let mut last = BigRational::zero();
    for k in 1..80u32 {
        let s = BigInt::from(3).pow(k);
        let cur = segre_success_bound(4, 2, 6, 2, &s);
        ensure!(cur >= last, "segre bound decreases at |S| = 3^{k}");
        ensure!(
            projective_degree_success_bound(2, 6, 4, 2, &s)
                <= projective_degree_success_bound(2, 6, 4, 2, &(&s + 1)),
            "degree bound decreases at 3^{k}"
        );
        last = cur;
    }
    // Exact values, evaluated by hand at |S| = 32749.
    // n = 2, m = 1, d = 2, codim 1: the D factor has exponent 0 and i runs over {1}.
    // n = 4, m = 2, d = 2, codim 1: D = 7 * 16 * 27 = 3024, i runs over {1, 2}.
    let s = BigInt::from(32749);
    let f = |a: i64| &one - BigRational::new(BigInt::from(a), s.clone());
    ensure!(
        segre_success_bound(2, 1, 2, 1, &s) == f(4),
        "bound(2,1,2,1) = {}",
        segre_success_bound(2, 1, 2, 1, &s)
    );
    let want = f(3024) * f(4) * f(16);
    ensure!(
        segre_success_bound(4, 2, 2, 1, &s) == want,
        "bound(4,2,2,1) = {}",
        segre_success_bound(4, 2, 2, 1, &s)
    );
    ensure!(
        degree_bound(4, 2, 2) == BigInt::from(3024),
        "D(4,2,2) = {}",
        degree_bound(4, 2, 2)
    );
    let d = degree_bound(2, 1, 2);
    ensure!(
        d == BigInt::from(432),
        "degree_bound_D(n=2, m=1, d=2) = {d}, expected 432"
    );
    Ok("D(2,1,2) = 432, limits and monotonicity hold".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("quadric surface csm, chi and profile", criterion_1),
        ("Segre classes of s52_V2 and s52_V3", criterion_2),
        ("smooth complete intersection Segre classes", criterion_3),
        ("projective degree invariants on every fixture", criterion_4),
        ("plane curve gradient degrees", criterion_5),
        ("cross-algorithm agreement", criterion_6),
        (
            "direct formula on smooth complete intersections",
            criterion_7,
        ),
        ("Milnor class identity", criterion_8),
        ("Segre stress runs", criterion_9),
        ("probability bounds", criterion_10),
    ];
    let mut failed = 0;
    for (k, (title, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default())
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(note) => println!("criterion {:>2} PASS ({secs:.2} s) {title}: {note}", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL ({secs:.2} s) {title}: {why}", k + 1);
            }
        }
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
