mod common;

use std::collections::BTreeMap;

use common::*;
use semirep::characters::abelian_character_table;
use semirep::constructions::*;
use semirep::quiver::full_quiver;
use semirep::rep::Analysis;
use semirep::semigroup::{GreenData, Group};

#[test]
fn hsiao_orders_match_the_count() {
    for (n, g) in [(1, 3), (2, 1), (3, 2), (3, 3), (4, 1)] {
        let group = Group::cyclic(g);
        let expected: usize = set_partitions_rgs(n)
            .iter()
            .map(|p| {
                let r = p.iter().max().unwrap() + 1;
                g.pow(r as u32) * factorial(r) as usize
            })
            .sum();
        let h = hsiao_semigroup(n, &group).unwrap();
        assert_eq!(h.semigroup.order(), expected);
        h.semigroup.check_associative().unwrap();
    }
}

#[test]
fn hsiao_j_order_is_refinement() {
    let g = Group::cyclic(2);
    let h = hsiao_semigroup(3, &g).unwrap();
    let green = GreenData::compute(&h.semigroup);
    let parts = set_partitions_rgs(3);
    let rgs = |e: &OrderedGPartition| {
        let mut v = vec![0; 3];
        let mut shape = e.shape();
        shape.sort();
        for (b, block) in shape.iter().enumerate() {
            for &x in block {
                v[x] = b;
            }
        }
        v
    };
    let class_shape: BTreeMap<usize, Vec<usize>> = h
        .elements
        .iter()
        .enumerate()
        .map(|(x, e)| (green.j_class_of(x), rgs(e)))
        .collect();
    assert_eq!(class_shape.len(), parts.len());
    for (&a, p) in &class_shape {
        for (&b, q) in &class_shape {
            // coarser partitions sit higher
            assert_eq!(green.j_leq(a, b), refines(p, q));
        }
    }
    let an = Analysis::new(h.semigroup.opposite()).unwrap();
    for (j, rec) in an.records.iter().enumerate() {
        let r = h.elements[rec.e].blocks.len();
        assert_eq!(an.subgroups[j].group.order(), 2usize.pow(r as u32));
    }
}

#[test]
fn closed_form_examples() {
    let t = abelian_character_table(&Group::trivial()).unwrap();
    let q = hsiao_quiver_closed_form(3, &t);
    assert_eq!((q.vertices.len(), q.arrow_count()), (5, 6));
    let t2 = abelian_character_table(&Group::cyclic(2)).unwrap();
    let q = hsiao_quiver_closed_form(2, &t2);
    assert_eq!((q.vertices.len(), q.arrow_count()), (6, 4));
    let t3 = abelian_character_table(&Group::cyclic(3)).unwrap();
    let q = hsiao_quiver_closed_form(4, &t3);
    for v in &q.vertices {
        let r = v.display.split('|').count();
        let out: usize = q.arrows.iter().filter(|a| a.from == v.id).map(|a| a.mult).sum();
        assert_eq!(out, r * (r - 1) / 2, "{}", v.display);
    }
}

#[test]
fn closed_form_matches_general_algorithm() {
    for (name, n, g) in hsiao_suite() {
        let t = abelian_character_table(&g).unwrap();
        let general = hsiao_quiver_general(n, &t, true).unwrap().graph;
        assert!(hsiao_quiver_closed_form(n, &t).same_labelled(&general), "{name}");
    }
}

#[test]
fn closed_form_matches_general_for_s3() {
    let (_, table) = perm_table(3, &s3_gens());
    let general = hsiao_quiver_general(2, &table, false).unwrap().graph;
    let closed = hsiao_quiver_closed_form(2, &table);
    assert!(closed.same_labelled(&general));
    // [2,1] ⊗ [2,1] = [3] + [2,1] + [1,1,1]
    let from = closed.vertices.iter().find(|v| v.display == "1:[2,1]|2:[2,1]").unwrap().id;
    assert_eq!(closed.arrows.iter().filter(|a| a.from == from).count(), 3);
}

#[test]
fn gbar_matches_full_quiver_and_permutation_character() {
    for (name, degree, gens) in gbar_suite() {
        let (maps, table) = perm_table(degree, &gens);
        let q = gbar_quiver(degree, &gens, &table).unwrap();
        let (_, an, tables) = gbar_analysis(degree, &gens, &table).unwrap();
        let full = full_quiver(&an, &tables, true).unwrap().graph;
        assert_eq!(q, full, "{name}");
        // multiplicities straight from fixed points
        let g = table.group();
        for (i, label) in table.labels().iter().enumerate() {
            let mut acc = semirep::exact::Cyclotomic::from_int(0);
            for x in g.elements() {
                let fixed = maps[x].iter().enumerate().filter(|&(p, &y)| p == y as usize).count();
                acc = acc + semirep::exact::Cyclotomic::from_int(fixed as i64) * table.value(i, g.inv(x)).clone();
            }
            let m = (acc * semirep::exact::Cyclotomic::from_rational(semirep::exact::rat(1, g.order() as i64)))
                .to_i64()
                .unwrap() as usize;
            let expected = if i == table.trivial() { m - 1 } else { m };
            let got: usize = q
                .arrows
                .iter()
                .filter(|a| q.vertex(a.to).irr == *label && q.vertex(a.to).jclass != q.vertex(a.from).jclass)
                .map(|a| a.mult)
                .sum();
            assert_eq!(got, expected, "{name} {label}");
        }
        let mass: usize = q.arrows.iter().map(|a| a.mult * table.degree(table.index_of(&q.vertex(a.to).irr).unwrap())).sum();
        assert_eq!(mass, degree - 1, "{name}");
    }
}

#[test]
fn representation_types() {
    let got: Vec<RepresentationType> = gbar_suite()
        .iter()
        .map(|(_, d, g)| representation_type(*d, g).unwrap())
        .collect();
    use RepresentationType::*;
    assert_eq!(got, vec![Finite, Finite, Tame, Wild, Finite]);
}

#[test]
fn rees_spec_gives_one_class_below_identity() {
    let spec = ReesSpec {
        group: Group::cyclic(3),
        ell: 2,
        r: 3,
        p: vec![vec![0, 1], vec![2, 0], vec![1, 1]],
    };
    let s = rees_with_identity(&spec).unwrap();
    s.check_associative().unwrap();
    let g = GreenData::compute(&s);
    assert_eq!(g.num_j_classes(), 2);
    let one = s.identity().unwrap();
    let low = g.j_class_of(0);
    assert_eq!(g.j.classes[low].len(), 18);
    assert!(g.j_less(low, g.j_class_of(one)));
}
