mod common;

use common::*;
use semirep::characters::abelian_character_table;
use semirep::constructions::{rees_with_identity, ReesSpec};
use semirep::exact::Cyclotomic;
use semirep::rep::*;
use semirep::semigroup::{FiniteSemigroup, Group};

fn rees() -> Analysis {
    Analysis::new(rees_with_identity(&ReesSpec::c2_example()).unwrap()).unwrap()
}

#[test]
fn rees_example_is_not_directed() {
    let an = rees();
    let report = is_directed(&an).unwrap();
    assert!(!report.directed);
    let low = an.green.j_class_of(0);
    let c = report.classes.iter().find(|c| c.jclass == low).unwrap();
    assert_eq!((c.expansion_rank, c.full_rank), (3, 4));
}

#[test]
fn rees_simple_dimensions() {
    let an = rees();
    let j = an.green.j_class_of(0);
    let m = sandwich_matrix(&an.semigroup, &an.records[j]).unwrap();
    assert!(!m.is_left_invertible());
    let table = abelian_character_table(&an.subgroups[j].group).unwrap();
    let sign = 1 - table.trivial();
    // [[1,1],[1,-1]] and [[1,1],[1,1]]
    assert_eq!(m.simple_dimension(&table, sign), Some(2));
    assert_eq!(m.simple_dimension(&table, table.trivial()), Some(1));
}

#[test]
fn rrbg_suite_is_directed() {
    for (name, n, g) in hsiao_suite() {
        let (an, _) = hsiao_opposite(n, &g);
        let report = is_directed(&an).unwrap();
        assert!(report.directed, "{name}");
    }
}

#[test]
fn induced_character_two_routes() {
    let (an, tables) = hsiao_opposite(2, &Group::trivial());
    let bottom = an.green.principal_order[0];
    let rep = SchutzRep::new(&an, bottom).unwrap();
    let theta = rep.theta(&tables[bottom], 0);
    let one = an.semigroup.identity().unwrap();
    assert_eq!(theta[one], Cyclotomic::from_int(2));
    for &a in &an.records[bottom].elements {
        assert_eq!(theta[a], Cyclotomic::from_int(1));
    }
    for (name, n, g) in hsiao_suite().into_iter().take(4) {
        let (an, tables) = hsiao_opposite(n, &g);
        for j in 0..an.num_j_classes() {
            let rep = SchutzRep::new(&an, j).unwrap();
            for w in 0..tables[j].len() {
                assert_eq!(rep.theta(&tables[j], w), theta_closed(&an, j, &tables[j], w), "{name} J{j}");
            }
        }
    }
}

#[test]
fn schutzenberger_rep_is_a_homomorphism() {
    let (an, _) = hsiao_opposite(2, &Group::cyclic(2));
    let s = &an.semigroup;
    for j in 0..an.num_j_classes() {
        let rep = SchutzRep::new(&an, j).unwrap();
        for a in s.elements() {
            for b in s.elements() {
                assert_eq!(rep.compose(&an, a, b), rep.rows[s.mul(a, b)]);
            }
        }
    }
}

#[test]
fn cartan_two_element_chain() {
    let (an, tables) = hsiao_opposite(2, &Group::trivial());
    let c = cartan_matrix(&an, &tables).unwrap();
    let top = c.vertices.iter().find(|v| v.jclass == an.green.principal_order[1]).unwrap().id;
    let min = c.vertices.iter().find(|v| v.jclass == an.green.principal_order[0]).unwrap().id;
    assert_eq!(c.reordered(&[top, min]), vec![vec![1, 1], vec![0, 1]]);
}

#[test]
fn cartan_routes_agree() {
    for (name, n, g) in hsiao_suite() {
        let (an, tables) = hsiao_opposite(n, &g);
        let closed = cartan_closed_form(&an, &tables).unwrap();
        let oracle = cartan_oracle(&an, &tables).unwrap();
        assert_eq!(closed, oracle, "{name}");
        assert!(closed.is_unipotent(&an), "{name}");
    }
}

#[test]
fn semisimple_quotient_kernels() {
    let (an, _) = hsiao_opposite(2, &Group::trivial());
    let q = semisimple_quotient(&an).unwrap();
    assert_eq!((q.kernel_dim, q.nilpotency_index), (1, Some(2)));
    let (an, _) = hsiao_opposite(2, &Group::cyclic(2));
    assert_eq!(semisimple_quotient(&an).unwrap().kernel_dim, 4);
    for (name, n, g) in hsiao_suite() {
        let (an, _) = hsiao_opposite(n, &g);
        let q = semisimple_quotient(&an).unwrap();
        let groups: usize = group_orders_by_search(&an.semigroup).iter().sum();
        assert_eq!(q.kernel_dim, an.semigroup.order() - groups, "{name}");
        assert_eq!(q.total_dim, groups, "{name}");
        let idx = q.nilpotency_index.expect("kernel is nilpotent");
        assert!(idx <= an.num_j_classes() + 1, "{name}");
    }
}

#[test]
fn nico_examples() {
    let (an, _) = hsiao_opposite(2, &Group::trivial());
    assert_eq!(nico_bound(&an.semigroup, &an.green).bound, 1);
    let right_zero = FiniteSemigroup::from_table(vec![vec![0, 1], vec![0, 1]], None, None).unwrap();
    let g = semirep::semigroup::GreenData::compute(&right_zero);
    assert_eq!(nico_sigma(&right_zero, &g, 0), 1);
    let group = Group::cyclic(3);
    let g = semirep::semigroup::GreenData::compute(group.semigroup());
    assert_eq!(nico_sigma(group.semigroup(), &g, 0), 0);
    for (name, n, gr) in hsiao_suite() {
        let (an, _) = hsiao_opposite(n, &gr);
        let d = nico_bound(&an.semigroup, &an.green);
        assert!(d.bound <= 2 * (d.longest_chain - 1), "{name}");
    }
}

#[test]
fn non_regular_input_is_rejected() {
    // the null semigroup {0, a}, a·a = 0
    let s = FiniteSemigroup::from_table(vec![vec![0, 0], vec![0, 0]], None, None).unwrap();
    let err = Analysis::new(s).unwrap_err();
    assert!(matches!(err, semirep::Error::Precondition(_)));
    assert!(err.to_string().contains("1"));
}

#[test]
fn multiplicities_sum_to_induced_dimension() {
    for (name, n, g) in hsiao_suite().into_iter().take(5) {
        let (an, tables) = hsiao_opposite(n, &g);
        let one = an.semigroup.identity().unwrap();
        for j in 0..an.num_j_classes() {
            let rep = SchutzRep::new(&an, j).unwrap();
            for w in 0..tables[j].len() {
                let theta = rep.theta(&tables[j], w);
                let mut mass = 0;
                for i in 0..an.num_j_classes() {
                    for v in 0..tables[i].len() {
                        let m = multiplicity(&an, &theta, i, &tables[i], v).unwrap();
                        // simples of an RRBG have dimension dim V
                        mass += m * tables[i].degree(v);
                    }
                }
                assert_eq!(Cyclotomic::from_int(mass as i64), theta[one], "{name} J{j}");
            }
        }
    }
}
