mod common;

use common::{corpus, cx, mask, unmask};
use proptest::prelude::*;
use tsc_core::{friendship, build_tsc, SimplicialComplex};

/// Faces by brute force: every non-empty vertex subset contained in a facet.
fn brute_faces(c: &SimplicialComplex) -> Vec<Vec<Vec<u32>>> {
    let nv = c.vertices().len();
    let facet_masks: Vec<u64> = c.facets().iter().map(|f| mask(c, f)).collect();
    let mut by_dim = vec![Vec::new(); (c.dimension() + 1).max(0) as usize];
    for m in 1u64..(1 << nv) {
        if facet_masks.iter().any(|&f| m & f == m) {
            by_dim[m.count_ones() as usize - 1].push(unmask(c, m));
        }
    }
    for d in &mut by_dim {
        d.sort();
    }
    by_dim
}

#[test]
fn faces_match_brute_force_on_corpus() {
    let mut checked = 0;
    for item in corpus(2) {
        if item.complex.vertices().len() <= 12 {
            assert_eq!(item.complex.all_faces(), brute_faces(&item.complex), "{}", item.name);
            checked += 1;
        }
    }
    assert!(checked > 50);
}

#[test]
fn inclusion_bound() {
    for item in corpus(3) {
        let c = &item.complex;
        let total: usize = c.f_vector().0.iter().sum();
        let bound: u64 = c.facets().iter().map(|f| 1u64 << f.len()).sum();
        assert!(bound as usize > total, "{}", item.name);
    }
    // disjoint facets: equality counting ∅ once per facet
    let d = cx(&[&[1, 2, 3], &[4, 5], &[6]]);
    let total: usize = d.f_vector().0.iter().sum();
    assert_eq!(total + 3, 8 + 4 + 2);
}

#[test]
fn links_satisfy_definition() {
    for item in corpus(2) {
        let c = &item.complex;
        for face in c.all_faces().iter().flatten() {
            let link = c.link(face).unwrap();
            for tau in link.all_faces().iter().flatten() {
                assert!(tau.iter().all(|v| !face.contains(v)));
                let mut u: Vec<u32> = tau.iter().chain(face).copied().collect();
                u.sort_unstable();
                assert!(c.contains_face(&u), "{}: {:?} in link of {:?}", item.name, tau, face);
            }
        }
    }
}

#[test]
fn friendship_f_vectors_and_links() {
    let (g, l) = friendship(1).unwrap();
    let f6 = build_tsc(&g, &l).unwrap();
    assert_eq!(f6.faces_of_dim(1).len(), 15);
    assert_eq!(f6.f_vector().0, vec![6, 15, 20]);
    assert!(f6.is_facet_connected() && f6.is_pure() && f6.dimension() == 2);
    let link = f6.link(&[6]).unwrap();
    assert_eq!(link.facets().len(), 10);
    assert!(link.facets().iter().all(|f| f.len() == 2));
    assert_eq!(link.vertices(), &[1, 2, 3, 4, 5]);

    let (g, l) = friendship(2).unwrap();
    assert_eq!(build_tsc(&g, &l).unwrap().f_vector().0, vec![11, 50, 76]);
}

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(1u32..=9, 1..=4), 1..8)
        .prop_map(|sets| SimplicialComplex::from_facets(sets).unwrap())
}

proptest! {
    #[test]
    fn random_complexes_match_oracle(c in arb_complex()) {
        prop_assert_eq!(c.all_faces(), brute_faces(&c));
        // antichain
        for a in c.facets() {
            for b in c.facets() {
                prop_assert!(a == b || !tsc_core::complex::is_subset(a, b));
            }
        }
    }

    #[test]
    fn links_of_random_complexes(c in arb_complex()) {
        for face in c.all_faces().iter().flatten() {
            let link = c.link(face).unwrap();
            // faces of the link biject with faces of Δ containing σ
            let above = c.all_faces().iter().flatten()
                .filter(|f| tsc_core::complex::is_subset(face, f) && f.len() > face.len())
                .count();
            let below: usize = link.f_vector().0.iter().sum();
            prop_assert_eq!(above, below);
        }
    }
}
