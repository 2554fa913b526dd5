//! Acceptance run: one `PASS`/`FAIL` line per criterion.
//!
//! Criterion 3 cannot pass as stated. The n = 8 list it names contains one
//! type that reduces further and omits one genuine type (see
//! `tests/n8_list.rs`), and its stated total disagrees with its own
//! length. The line stays `FAIL`; the process only exits nonzero when the
//! mismatch differs from that pinned difference or another line fails.

mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use belitskii::coset::subpermutation_of;
use belitskii::enumerate::{
    bell_number, bundled_table, combine_census, construct_3nilpotent, enumerate_bforms, enumerate_for_partition,
    is_canonical, max_3nilpotent_parameters, set_partitions, verify_against_table,
};
use belitskii::oracle::{bn_orbits_bruteforce, check_canon_consistency};
use belitskii::{canon, GraphType, SquareMatrix};
use common::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const KNOWN_MISSING: &str = "145|236|78: 24|17";
const KNOWN_UNEXPECTED: &str = "12|34|56|78: 57|13|15";

type Check = (&'static str, fn() -> Verdict);

enum Verdict {
    Pass(String),
    Fail(String),
    /// Red, but matching the pinned, analysed discrepancy.
    KnownFail(String),
}

fn strings(forms: &[GraphType]) -> BTreeSet<String> {
    forms.iter().map(ToString::to_string).collect()
}

fn within(t: Duration, limit_secs: u64) -> bool {
    t <= Duration::from_secs(limit_secs)
}

fn table_small() -> Verdict {
    let start = Instant::now();
    let mut got = BTreeSet::new();
    let mut want = BTreeSet::new();
    for n in 1..=6 {
        got.extend(strings(&enumerate_bforms(n, true, 1).unwrap().forms));
        want.extend(strings(&bundled_table(n).unwrap()));
    }
    let t = start.elapsed();
    let msg = format!("n<=6 indecomposable forms={} listed={} in {t:.2?}", got.len(), want.len());
    if got == want && got.len() == 29 && within(t, 5) {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn table_seven() -> Verdict {
    let start = Instant::now();
    let r = enumerate_bforms(7, true, 1).unwrap();
    let t = start.elapsed();
    let matches = strings(&r.forms) == strings(&bundled_table(7).unwrap());
    let msg = format!(
        "n=7 forms={} partitions={} table-match={matches} in {t:.2?}",
        r.form_count(),
        r.partition_count()
    );
    if matches && r.form_count() == 85 && r.partition_count() == 58 && within(t, 30) {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn table_eight() -> Verdict {
    let start = Instant::now();
    let single = enumerate_bforms(8, true, 1).unwrap();
    let t1 = start.elapsed();
    let start = Instant::now();
    let parallel = enumerate_bforms(8, true, 4).unwrap();
    let t4 = start.elapsed();
    let diff = verify_against_table(8, 1).unwrap();
    let identical = single == parallel;
    let msg = format!(
        "n=8 forms={} partitions={} listed={} missing={} unexpected={} jobs1={t1:.2?} jobs4={t4:.2?} identical={identical} cores={}",
        single.form_count(),
        single.partition_count(),
        diff.listed,
        diff.missing.len(),
        diff.unexpected.len(),
        std::thread::available_parallelism().map_or(1, usize::from),
    );
    let known = diff.missing.len() == 1
        && diff.unexpected.len() == 1
        && diff.missing[0].to_string() == KNOWN_MISSING
        && diff.unexpected[0].to_string() == KNOWN_UNEXPECTED
        && diff.duplicates.is_empty();
    let wanted = single.form_count() == 481 && single.partition_count() == 245 && diff.is_match();
    if wanted && identical && within(t1, 600) {
        Verdict::Pass(msg)
    } else if known && identical && single.form_count() == 482 && single.partition_count() == 245 {
        Verdict::KnownFail(format!("{msg}; -{KNOWN_MISSING} +{KNOWN_UNEXPECTED}"))
    } else {
        Verdict::Fail(msg)
    }
}

fn worked_example() -> Verdict {
    let a = SquareMatrix::from_i64_rows(
        Q,
        &[
            &[0, 1, 0, 3, -2, 0, 1],
            &[0, 0, 0, 1, -1, 0, 0],
            &[0, 0, 0, 0, 0, 0, 1],
            &[0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 1, 0],
            &[0, 0, 0, 0, 0, 0, 0],
            &[0, 0, 0, 0, 0, 0, 0],
        ],
    )
    .unwrap();
    let c = canon(&a).unwrap();
    let mut expect = subpermutation_of(&a).unwrap().to_matrix(Q);
    expect.set(1, 4, Q.one());
    let msg = format!("type={}", c.graph_type);
    if c.graph_type.to_string() == "124|37|56: 25" && c.matrix == expect && c.witness.apply(&a).unwrap() == c.matrix {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn partition_example() -> Verdict {
    let forms = enumerate_for_partition(&"123|478|56".parse().unwrap());
    let connected = forms.iter().filter(|t| t.is_connected()).count();
    let has = strings(&forms).contains("123|478|56: 57|24|_25_");
    let msg = format!("forms={} indecomposable={connected} has-parameter-form={has}", forms.len());
    if forms.len() == 10 && connected == 5 && has {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn non_similar_pair() -> Verdict {
    let rows_a: [&[i64]; 5] = [&[0, 1, 1, 0, 0], &[0, 0, 0, 0, 1], &[0, 0, 0, 1, 0], &[0; 5], &[0; 5]];
    let rows_b: [&[i64]; 5] = [&[0, 1, 0, 0, 0], &[0, 0, 0, 0, 1], &[0, 0, 0, 1, 0], &[0; 5], &[0; 5]];
    let a = SquareMatrix::from_i64_rows(Q, &rows_a).unwrap();
    let b = SquareMatrix::from_i64_rows(Q, &rows_b).unwrap();
    let (ca, cb) = (canon(&a).unwrap(), canon(&b).unwrap());
    let same_coset = subpermutation_of(&a).unwrap() == subpermutation_of(&b).unwrap();
    let msg = format!("A -> {}, B -> {}, same double coset={same_coset}", ca.graph_type, cb.graph_type);
    if ca.matrix != cb.matrix && ca.graph_type != cb.graph_type && same_coset {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn orbit_oracle() -> Verdict {
    let start = Instant::now();
    let mut parts = Vec::new();
    let mut violations = 0;
    for p in [2, 3] {
        for n in 1..=4 {
            let table = bn_orbits_bruteforce(gf(p), n).unwrap();
            let report = check_canon_consistency(&table);
            violations += report.violations.len();
            if n == 4 {
                parts.push(format!("GF({p}) n=4 orbits={}", report.orbits));
            }
        }
    }
    let t = start.elapsed();
    let msg = format!("{} violations={violations} in {t:.2?}", parts.join(" "));
    if violations == 0 && within(t, 300) {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn invariance_fuzz() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = 0;
    let mut total = 0;
    for n in 3..=6 {
        for _ in 0..1000 {
            let a = random_strict_upper(&mut rng, Q, n, 0.5);
            let t = random_upper_invertible(&mut rng, Q, n);
            let (c1, c2) = (canon(&a).unwrap(), canon(&conjugate(&a, &t)).unwrap());
            total += 1;
            if c1.graph_type != c2.graph_type || c1.params != c2.params || c1.matrix != c2.matrix {
                failures += 1;
            }
        }
    }
    let msg = format!("pairs={total} failures={failures}");
    if failures == 0 {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn three_nilpotent() -> Verdict {
    let mut built = 0;
    let mut bad = Vec::new();
    for n in 6..=12 {
        let Some(bound) = max_3nilpotent_parameters(n) else { continue };
        for r in 0..=bound {
            let t = construct_3nilpotent(n, r).unwrap();
            let m = t.realize(Q, &vec![Q.one(); t.mark_count()]).unwrap();
            built += 1;
            let ok = t.is_connected()
                && t.mark_count() == r
                && is_canonical(&t)
                && m.pow(3).is_zero()
                && !m.pow(2).is_zero();
            if !ok {
                bad.push(format!("n={n} r={r}"));
            }
        }
    }
    let msg = format!("types={built} bad=[{}]", bad.join(", "));
    if bad.is_empty() && built > 0 {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn combinator() -> Verdict {
    let t: GraphType = "12|34: 13".parse().unwrap();
    let forms = strings(&combine_census(&t, &t, true).unwrap());
    let canonical = combine_census(&t, &t, true).unwrap().iter().all(is_canonical);
    let has = forms.contains("1256|3478: 57|_13_");
    let msg = format!("indecomposable={} has-parameter-form={has} canonical={canonical}", forms.len());
    if forms.len() == 6 && has && canonical {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn parameter_law() -> Verdict {
    let mut checked = 0;
    let mut exceptions = 0;
    for n in 1..=8 {
        for t in enumerate_bforms(n, false, 0).unwrap().forms {
            checked += 1;
            let law = t.all_arcs().len() + t.component_count() - n;
            if t.mark_count() != law {
                exceptions += 1;
            }
        }
    }
    let msg = format!("forms={checked} exceptions={exceptions}");
    if exceptions == 0 {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn bell_counts() -> Verdict {
    let want = [1usize, 2, 5, 15, 52, 203, 877, 4140];
    let got: Vec<usize> = (1..=8).map(|n| set_partitions(n).unwrap().len()).collect();
    let formula: Vec<u128> = (1..=8).map(bell_number).collect();
    let msg = format!("{got:?}");
    if got == want && formula.iter().zip(&want).all(|(a, b)| *a == *b as u128) {
        Verdict::Pass(msg)
    } else {
        Verdict::Fail(msg)
    }
}

fn main() {
    let checks: [Check; 12] = [
        ("table n<=6", table_small),
        ("table n=7", table_seven),
        ("table n=8", table_eight),
        ("worked example", worked_example),
        ("partition 123|478|56", partition_example),
        ("non-similar pair", non_similar_pair),
        ("orbit oracle", orbit_oracle),
        ("invariance fuzz", invariance_fuzz),
        ("3-nilpotent family", three_nilpotent),
        ("combinator census", combinator),
        ("parameter count", parameter_law),
        ("bell counts", bell_counts),
    ];
    let mut unexpected = 0;
    for (k, (name, check)) in checks.iter().enumerate() {
        match check() {
            Verdict::Pass(msg) => println!("PASS {:>2} {name}: {msg}", k + 1),
            Verdict::KnownFail(msg) => println!("FAIL {:>2} {name}: {msg} (known list discrepancy)", k + 1),
            Verdict::Fail(msg) => {
                unexpected += 1;
                println!("FAIL {:>2} {name}: {msg}", k + 1);
            }
        }
    }
    if unexpected > 0 {
        std::process::exit(1);
    }
}
