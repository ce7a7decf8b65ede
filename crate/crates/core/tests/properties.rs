use num_bigint::BigInt;
use num_traits::Zero;
use proptest::prelude::*;

use knotforge::diagram::{parse_gauss, parse_pd, KnotDiagram};
use knotforge::fpgroup::{
    abelianization, fox_colorings, tietze_simplify, AbelianGroup, Letter, Presentation, Word,
};
use knotforge::homology::{
    homology_of_complex, knot_homology, presentation_complex, smith_normal_form, IntMatrix,
};
use knotforge::manifold::{
    close_manifold, closed_manifold_h1, handlebody_invariants, HeegaardDiagram,
};
use knotforge::table::KnotTable;
use knotforge::wirtinger::{abelianized_boundary, wirtinger_presentation};

fn bundled() -> Vec<(String, String, KnotDiagram)> {
    let t = KnotTable::bundled();
    t.iter()
        .map(|(n, c)| (n.to_string(), c.to_string(), t.diagram(n).unwrap()))
        .collect()
}

fn table_names() -> impl Strategy<Value = String> {
    let names: Vec<String> = KnotTable::bundled().names().map(String::from).collect();
    proptest::sample::select(names)
}

/// Labels of a PD code as integer tuples.
fn pd_tuples(code: &str) -> Vec<[u64; 4]> {
    code.split(')')
        .filter(|s| s.contains('('))
        .map(|s| {
            let inner = s.split('(').nth(1).unwrap();
            let v: Vec<u64> = inner
                .split(',')
                .map(|x| x.trim().parse().unwrap())
                .collect();
            [v[0], v[1], v[2], v[3]]
        })
        .collect()
}

fn render_pd(tuples: &[[u64; 4]]) -> String {
    tuples
        .iter()
        .map(|t| format!("X({},{},{},{})", t[0], t[1], t[2], t[3]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn word_strategy(generators: usize, max_len: usize) -> impl Strategy<Value = Word> {
    proptest::collection::vec((1..=generators, any::<bool>()), 0..=max_len).prop_map(|ls| {
        Word::from_letters(
            ls.into_iter()
                .map(|(g, inv)| Letter::new(g, if inv { -1 } else { 1 })),
        )
    })
}

fn presentation_strategy() -> impl Strategy<Value = Presentation> {
    (1usize..=5).prop_flat_map(|g| {
        proptest::collection::vec(word_strategy(g, 8), 0..=5)
            .prop_map(move |rs| Presentation::new(g, rs).unwrap())
    })
}

#[test]
fn gauss_and_pd_round_trip_for_table() {
    for (name, _, d) in bundled() {
        assert_eq!(parse_gauss(&d.to_gauss()).unwrap(), d, "{name} via Gauss");
        assert_eq!(parse_pd(&d.to_pd()).unwrap(), d, "{name} via PD");
    }
}

#[test]
fn pd_and_gauss_trefoils_agree() {
    let pd = parse_pd("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
    let gauss = parse_gauss(&pd.to_gauss()).unwrap();
    assert_eq!(pd, gauss);
    assert_eq!(
        knot_homology(&pd),
        knot_homology(&parse_gauss("O1+U2+O3+U1+O2+U3+").unwrap())
    );
}

#[test]
fn wirtinger_matrix_shape() {
    for (name, _, d) in bundled() {
        let p = wirtinger_presentation(&d);
        assert_eq!(p.relators().len(), d.crossings().len(), "{name}");
        assert_eq!(p.generator_count(), d.arc_count(), "{name}");
        let m = abelianized_boundary(&p);
        for i in 0..m.rows() {
            let row = m.to_i64_rows().unwrap()[i].clone();
            let plus = row.iter().filter(|&&x| x == 1).count();
            let minus = row.iter().filter(|&&x| x == -1).count();
            let zero = row.iter().filter(|&&x| x == 0).count();
            assert!(
                (plus, minus) == (1, 1) && zero == row.len() - 2 || zero == row.len(),
                "{name} row {i}: {row:?}"
            );
        }
        let ones = IntMatrix::from_rows(1, &vec![vec![1i64]; m.cols()]).unwrap();
        assert!((&m * &ones).is_zero(), "{name}: rows do not sum to zero");
    }
}

#[test]
fn handlebody_ranks() {
    for g in 0..8 {
        let h = handlebody_invariants(g);
        assert_eq!(h.h1, AbelianGroup::free(g));
        assert!(h.h0.is_infinite_cyclic() && h.h2.is_trivial());
        assert_eq!(h.pi1.generator_count(), g);
    }
}

proptest! {
    #[test]
    fn relabeled_pd_codes_keep_invariants(name in table_names(), shift in 0u64..40, perm_seed in any::<u64>()) {
        let t = KnotTable::bundled();
        let d = t.diagram(&name).unwrap();
        let tuples = pd_tuples(t.code(&name).unwrap());
        prop_assume!(!tuples.is_empty());
        // Arbitrary injective relabeling of the segment labels.
        let max = 2 * tuples.len() as u64;
        let relabel = |x: u64| (x * 2 + 1) * (perm_seed % 7 + 1) + shift * 1000 + max;
        let mut moved: Vec<[u64; 4]> = tuples.iter().map(|t| t.map(relabel)).collect();
        moved.rotate_left((perm_seed as usize) % tuples.len());
        let e = parse_pd(&render_pd(&moved)).unwrap();
        prop_assert_eq!(e.crossings().len(), d.crossings().len());
        prop_assert_eq!(e.writhe(), d.writhe());
        prop_assert_eq!(knot_homology(&e), knot_homology(&d));
        for n in [3u32, 5, 7] {
            prop_assert_eq!(fox_colorings(&e, n), fox_colorings(&d, n));
        }
    }

    #[test]
    fn fox_counts_are_multiples_of_modulus(name in table_names(), n in 2u32..20) {
        let d = KnotTable::bundled().diagram(&name).unwrap();
        let c = fox_colorings(&d, n);
        prop_assert!(c >= BigInt::from(n));
        prop_assert!((c % BigInt::from(n)).is_zero());
    }

    #[test]
    fn tietze_never_adds_generators(p in presentation_strategy()) {
        let q = tietze_simplify(&p);
        prop_assert!(q.generator_count() <= p.generator_count());
        prop_assert_eq!(abelianization(&q), abelianization(&p));
        prop_assert_eq!(tietze_simplify(&q), q.clone());
    }

    #[test]
    fn euler_characteristic_matches_homology(p in presentation_strategy()) {
        let c = presentation_complex(&p);
        let mut alternating = 0i64;
        for n in 0..=c.top_degree() {
            let h = homology_of_complex(&c, n).unwrap();
            let r = h.rank() as i64;
            alternating += if n % 2 == 0 { r } else { -r };
        }
        prop_assert_eq!(alternating, c.euler_characteristic());
        prop_assert_eq!(c.euler_characteristic(), 1 - p.generator_count() as i64 + p.relators().len() as i64);
    }

    #[test]
    fn closing_matches_cokernel(g in 1usize..5, seed in proptest::collection::vec((0usize..5, any::<bool>()), 0..20)) {
        let curves: Vec<Word> = seed
            .chunks(4)
            .map(|c| Word::from_letters(c.iter().map(|&(x, inv)| Letter::new(x % g + 1, if inv { -1 } else { 1 }))))
            .collect();
        let h = HeegaardDiagram::new(g, curves.clone()).unwrap();
        let p = close_manifold(&h);
        prop_assert_eq!(p.generator_count(), g);
        prop_assert_eq!(p.relators().len(), curves.len());
        let m = abelianized_boundary(&p);
        let snf = smith_normal_form(&m);
        let nonunit: Vec<BigInt> = snf
            .invariant_factors()
            .into_iter()
            .filter(|d| *d > BigInt::from(1))
            .collect();
        let h1 = closed_manifold_h1(&h);
        prop_assert_eq!(h1.rank(), g - snf.rank());
        prop_assert_eq!(h1.torsion().to_vec(), nonunit);

        let mut doubled = curves.clone();
        doubled.extend(curves);
        let twice = HeegaardDiagram::new(g, doubled).unwrap();
        prop_assert_eq!(closed_manifold_h1(&twice), h1);
    }

    #[test]
    fn snf_invariant_under_unimodular_moves(
        entries in proptest::collection::vec(-9i64..=9, 12),
        moves in proptest::collection::vec((0usize..3, 0usize..3, -3i64..=3, any::<bool>()), 0..12),
    ) {
        let a = IntMatrix::from_entries(3, 4, entries.into_iter().map(BigInt::from).collect()).unwrap();
        let mut left = IntMatrix::identity(3);
        for (i, j, k, shear) in moves {
            if i == j {
                continue;
            }
            // Elementary row operation applied to the identity.
            let mut e = IntMatrix::identity(3).to_i64_rows().unwrap();
            if shear {
                e[i][j] = k;
            } else {
                e.swap(i, j);
            }
            left = &IntMatrix::from_rows(3, &e).unwrap() * &left;
        }
        let b = &left * &a;
        prop_assert_eq!(smith_normal_form(&b).invariant_factors(), smith_normal_form(&a).invariant_factors());
        prop_assert_eq!(
            smith_normal_form(&b.transpose()).invariant_factors(),
            smith_normal_form(&a).invariant_factors()
        );
    }
}
