use std::collections::BTreeSet;

use proptest::prelude::*;

use polyrook::algebra::{
    buchberger, generators, initial_ideal, is_groebner_basis, satisfies_sharp, satisfies_sharp_prime, Monomial,
    MonomialIdeal, MonomialOrder,
};
use polyrook::deadline::Deadline;
use polyrook::grid::Symmetry;
use polyrook::hilbert::{h_polynomial, h_polynomial_with_order, numerator, SeriesResult};
use polyrook::rook::rook_polynomial;
use polyrook::switch::switching_rook_polynomial;
use polyrook::{Cell, CellCollection, IntPolynomial};

/// Random weakly connected shape grown from the origin.
fn shape(max_rank: usize, king: bool) -> impl Strategy<Value = CellCollection> {
    prop::collection::vec((0usize..64, 0usize..8), 0..max_rank).prop_map(move |steps| {
        let dirs: &[(i32, i32)] = if king {
            &[(1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (-1, 1), (-1, -1)]
        } else {
            &[(1, 0), (-1, 0), (0, 1), (0, -1)]
        };
        let mut cells = vec![(0i32, 0i32)];
        for (from, dir) in steps {
            let (i, j) = cells[from % cells.len()];
            let (di, dj) = dirs[dir % dirs.len()];
            let c = (i + di, j + dj);
            if !cells.contains(&c) {
                cells.push(c);
            }
        }
        CellCollection::from_coords(&cells)
    })
}

fn any_shape(max_rank: usize) -> impl Strategy<Value = CellCollection> {
    prop_oneof![shape(max_rank, false), shape(max_rank, true)]
}

fn brute_rook_polynomial(p: &CellCollection) -> IntPolynomial {
    // two cells attack iff the segment between them on their common row or
    // column lies inside the collection
    let cells = p.cells();
    let attack = |a: &Cell, b: &Cell| {
        if a.j() == b.j() {
            (a.i().min(b.i())..=a.i().max(b.i())).all(|i| p.contains(&Cell::new(i, a.j())))
        } else if a.i() == b.i() {
            (a.j().min(b.j())..=a.j().max(b.j())).all(|j| p.contains(&Cell::new(a.i(), j)))
        } else {
            false
        }
    };
    let mut counts = vec![0i128; cells.len() + 1];
    for mask in 0u32..(1 << cells.len()) {
        let chosen: Vec<&Cell> = (0..cells.len())
            .filter(|k| mask >> k & 1 == 1)
            .map(|k| &cells[k])
            .collect();
        let ok = chosen
            .iter()
            .enumerate()
            .all(|(x, a)| chosen[x + 1..].iter().all(|b| !attack(a, b)));
        if ok {
            counts[chosen.len()] += 1;
        }
    }
    IntPolynomial::new(counts)
}

fn monomial_ideal() -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(prop::collection::vec(0u16..3, 4), 0..5)
        .prop_map(|gens| MonomialIdeal::new(4, gens.into_iter().map(Monomial::from_exponents).collect()))
}

/// Standard monomials of each degree up to `max_deg`, counted directly.
fn standard_counts(ideal: &MonomialIdeal, max_deg: u16) -> Vec<i128> {
    let n = ideal.nvars();
    let mut out = vec![0i128; max_deg as usize + 1];
    let mut exps = vec![0u16; n];
    loop {
        let deg: u16 = exps.iter().sum();
        if deg <= max_deg && !ideal.contains(&Monomial::from_exponents(exps.clone())) {
            out[deg as usize] += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            exps[k] += 1;
            if exps[k] <= max_deg {
                break;
            }
            exps[k] = 0;
            k += 1;
        }
    }
}

fn series_counts(numer: &IntPolynomial, nvars: usize, max_deg: usize) -> Vec<i128> {
    let mut c: Vec<i128> = (0..=max_deg).map(|k| numer.coeff(k)).collect();
    for _ in 0..nvars {
        for k in 1..=max_deg {
            c[k] += c[k - 1];
        }
    }
    c
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn canonical_form_is_constant_on_orbits(p in any_shape(10), di in -4i32..4, dj in -4i32..4) {
        let key = p.canonical();
        prop_assert!(key.is_canonical());
        for s in Symmetry::ALL {
            prop_assert_eq!(&p.transform(s).translate(di, dj).canonical(), &key);
        }
    }

    #[test]
    fn codec_round_trips(p in any_shape(10)) {
        prop_assert_eq!(CellCollection::parse(&p.format()).unwrap(), p);
    }

    #[test]
    fn rook_polynomial_matches_subset_enumeration(p in any_shape(9)) {
        prop_assert_eq!(rook_polynomial(&p).unwrap(), brute_rook_polynomial(&p));
    }

    #[test]
    fn switching_classes_never_exceed_placements(p in any_shape(9)) {
        let r = rook_polynomial(&p).unwrap();
        let s = switching_rook_polynomial(&p).unwrap();
        prop_assert_eq!(r.degree(), s.degree());
        for k in 0..=r.degree() {
            prop_assert!(s.coeff(k) >= 1 && s.coeff(k) <= r.coeff(k));
        }
        if p.is_thin() {
            prop_assert_eq!(r, s);
        }
    }

    #[test]
    fn numerator_counts_standard_monomials(i in monomial_ideal()) {
        let n = numerator(&i);
        prop_assert_eq!(series_counts(&n, i.nvars(), 5), standard_counts(&i, 5));
        let s = SeriesResult::from_numerator(n.clone(), i.nvars());
        if !s.h_poly.is_zero() {
            prop_assert!(s.h_poly.eval(1) != 0);
            let back = &s.h_poly * &IntPolynomial::one_minus_t_pow(1).pow((i.nvars() - s.krull_dim) as u32);
            prop_assert_eq!(back, n);
        }
    }

    #[test]
    fn buchberger_output_is_a_reduced_basis(p in any_shape(7)) {
        for order in [MonomialOrder::Rev, MonomialOrder::Lex] {
            let gens = generators(&p, order);
            let gb = buchberger(&gens, order);
            prop_assert!(is_groebner_basis(&gb, order));
            let leads: BTreeSet<_> = gb.iter().map(|b| b.lead.clone()).collect();
            prop_assert_eq!(leads.len(), gb.len());
            prop_assert_eq!(is_groebner_basis(&gens, order), gb.len() == gens.len());
            prop_assert_eq!(
                initial_ideal(&p, order).generators().len(),
                gb.len()
            );
        }
    }

    #[test]
    fn series_does_not_depend_on_the_order(p in any_shape(7)) {
        let rev = h_polynomial_with_order(&p, MonomialOrder::Rev, &Deadline::none()).unwrap();
        let lex = h_polynomial_with_order(&p, MonomialOrder::Lex, &Deadline::none()).unwrap();
        prop_assert_eq!(rev, lex);
    }

    #[test]
    fn h_and_switching_factor_over_separated_parts(a in any_shape(5), b in any_shape(5)) {
        let a = a.normalized();
        let b = b.normalized();
        let width = a.bounding_box().unwrap().width() as i32;
        let joint = a.union(&b.translate(width + 1, 0));
        prop_assert_eq!(
            h_polynomial(&joint).h_poly,
            h_polynomial(&a).h_poly * h_polynomial(&b).h_poly
        );
        prop_assert_eq!(
            switching_rook_polynomial(&joint).unwrap(),
            switching_rook_polynomial(&a).unwrap() * switching_rook_polynomial(&b).unwrap()
        );
    }

    #[test]
    fn reflection_swaps_the_conditions(p in any_shape(8), s in 0usize..8) {
        let q = p.transform(Symmetry::ALL[s]);
        prop_assert_eq!(satisfies_sharp(&q), satisfies_sharp_prime(&q.reflect()));
        prop_assert_eq!(satisfies_sharp(&q), satisfies_sharp(&q.transform(Symmetry::Rot180)));
    }

    #[test]
    fn simple_shapes_have_the_expected_dimension(p in any_shape(8)) {
        let s = h_polynomial(&p);
        if p.is_simple() {
            prop_assert_eq!(s.krull_dim, p.vertex_count() - p.rank());
            prop_assert!(s.h_poly.coeffs().iter().all(|&c| c >= 0));
        }
    }
}
