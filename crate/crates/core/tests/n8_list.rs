//! The two places where the bundled n = 8 list and the enumeration differ,
//! each settled with the linear-algebra similarity test.

mod common;

use belitskii::enumerate::{bundled_table, enumerate_for_partition, is_canonical, verify_against_table};
use belitskii::oracle::bn_similar;
use belitskii::{canon, GraphType, Scalar, SquareMatrix};
use common::Q;

fn realize(t: &GraphType, params: &[Scalar]) -> SquareMatrix {
    t.realize(Q, params).unwrap()
}

fn ones(t: &GraphType) -> SquareMatrix {
    realize(t, &vec![Q.one(); t.mark_count()])
}

/// Parameter vectors with entries in {1, 2, -1}.
fn param_grid(marks: usize) -> Vec<Vec<Scalar>> {
    let mut out = vec![Vec::new()];
    for _ in 0..marks {
        out = out
            .into_iter()
            .flat_map(|v| {
                [1, 2, -1].map(|x| {
                    let mut w = v.clone();
                    w.push(Q.from_i64(x));
                    w
                })
            })
            .collect();
    }
    out
}

#[test]
fn the_difference_is_exactly_two_types() {
    let diff = verify_against_table(8, 1).unwrap();
    assert_eq!(diff.listed, 482);
    assert_eq!(diff.enumerated, 482);
    let missing: Vec<String> = diff.missing.iter().map(ToString::to_string).collect();
    let unexpected: Vec<String> = diff.unexpected.iter().map(ToString::to_string).collect();
    assert_eq!(missing, ["145|236|78: 24|17"]);
    assert_eq!(unexpected, ["12|34|56|78: 57|13|15"]);
    assert!(diff.duplicates.is_empty());
    assert_eq!(bundled_table(8).unwrap().len(), 482);
}

#[test]
fn listed_type_reduces_to_a_decomposable_one() {
    let listed: GraphType = "145|236|78: 24|17".parse().unwrap();
    let smaller: GraphType = "145|236|78: 24".parse().unwrap();
    assert!(!is_canonical(&listed));
    assert!(!smaller.is_connected());
    let (a, b) = (ones(&listed), ones(&smaller));
    let t = bn_similar(&a, &b).unwrap().expect("the extra arc 17 can be removed");
    assert!(t.is_nonsingular_upper());
    assert_eq!(t.multiply(&a).unwrap(), b.multiply(&t).unwrap());
    assert_eq!(canon(&a).unwrap().graph_type, smaller);
}

#[test]
fn unlisted_type_is_a_separate_orbit() {
    let extra: GraphType = "12|34|56|78: 57|13|15".parse().unwrap();
    assert!(is_canonical(&extra));
    assert!(extra.is_connected());
    let a = ones(&extra);
    let others = enumerate_for_partition(extra.partition());
    assert!(others.contains(&extra));
    for other in others.iter().filter(|t| **t != extra) {
        for params in param_grid(other.mark_count()) {
            let c = realize(other, &params);
            assert!(bn_similar(&a, &c).unwrap().is_none(), "similar to {other} at {params:?}");
        }
    }
}
