//! Worked examples, one test per module.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use homquiver::auslander::*;
use homquiver::cyclic::*;
use homquiver::hochschild::*;
use homquiver::ktheory::*;
use homquiver::scalar::{cyclotomic_polynomial, ker_coker_dim_of_mult};
use homquiver::taft::*;
use homquiver::*;

fn q() -> Field {
    Field::rationals()
}

fn fp(p: u64) -> Field {
    Field::new(FieldDescriptor::PrimeField(p)).unwrap()
}

fn lam(n: usize, field: &Field) -> AlgebraPresentation {
    AlgebraPresentation::truncated(Quiver::crown(n).unwrap(), n, field)
}

fn ints(v: &[i64]) -> Vec<BigInt> {
    v.iter().map(|&x| BigInt::from(x)).collect()
}

fn multiset(pairs: &[((usize, usize), usize)]) -> Multiset {
    pairs.iter().map(|&((i, u), m)| (IndecLabel::new(i, u), m)).collect()
}

#[test]
fn scalars() {
    assert_eq!(cyclotomic_polynomial(1).coeffs(), ints(&[-1, 1]).as_slice());
    assert_eq!(cyclotomic_polynomial(2).coeffs(), ints(&[1, 1]).as_slice());
    assert_eq!(cyclotomic_polynomial(6).coeffs(), ints(&[1, -1, 1]).as_slice());

    assert_eq!(ker_coker_dim_of_mult(FieldDescriptor::Rationals, 3), (0, 0));
    assert_eq!(ker_coker_dim_of_mult(FieldDescriptor::PrimeField(2), 2), (1, 1));
    assert_eq!(ker_coker_dim_of_mult(FieldDescriptor::PrimeField(3), 2), (0, 0));
}

#[test]
fn ranks_and_small_complexes() {
    let f = q();
    assert_eq!(SparseMatrix::zeros(&f, 3, 3).rank(), 0);
    assert_eq!(SparseMatrix::identity(&f, 4).rank(), 4);
    assert_eq!(SparseMatrix::from_i64(&f, &[vec![1, 2], vec![2, 4]]).rank(), 1);

    let mut c = GradedChainComplex::new(&f, 1, 0);
    c.insert(0, ChainPiece::new(&f, vec![1], vec![]).unwrap());
    let h = c.homology_dims(Provenance::BruteForce).unwrap();
    assert_eq!(h.get(0, 0), 1);

    let mut c = GradedChainComplex::new(&f, 1, 0);
    c.insert(0, ChainPiece::new(&f, vec![1, 1], vec![SparseMatrix::identity(&f, 1)]).unwrap());
    let h = c.homology_dims(Provenance::BruteForce).unwrap();
    assert!(h.nonzero().is_empty());

    let basis = oracle_basis(&lam(2, &f), 2).unwrap();
    let h = bar_complex(&basis, 3, 2, dim_cap()).unwrap().homology_dims(Provenance::BruteForce).unwrap();
    for p in 0..=3 {
        let expected = usize::from(p == 1 || p == 2);
        assert_eq!(h.get(p, 2), expected, "p={p}");
    }
}

#[test]
fn quivers_and_cycles() {
    let c1 = Quiver::crown(1).unwrap();
    assert_eq!((c1.num_vertices(), c1.num_arrows()), (1, 1));
    let c2 = Quiver::crown(2).unwrap();
    assert_eq!(c2.num_arrows(), 2);
    assert!(c2.arrows().iter().any(|a| (a.src, a.tgt) == (0, 1)));
    assert!(c2.arrows().iter().any(|a| (a.src, a.tgt) == (1, 0)));
    let c3 = Quiver::crown(3).unwrap();
    for v in 0..3 {
        assert_eq!(c3.out_arrows(v).len(), 1);
        assert_eq!(c3.arrow(c3.out_arrows(v)[0]).tgt, (v + 1) % 3);
    }

    let inv = c2.cycle_invariants(4);
    let ab = |r: usize| inv.get(&r).copied().unwrap_or((0, 0));
    assert_eq!(ab(1), (0, 0));
    assert_eq!(ab(2), (1, 1));
    assert_eq!(ab(3), (0, 0));
    assert_eq!(ab(4), (1, 0));

    for n in 1..=5 {
        let inv = Quiver::crown(n).unwrap().cycle_invariants(3 * n);
        for c in 1..=3 {
            assert_eq!(inv[&(c * n)], (1, usize::from(c == 1)), "n={n} c={c}");
        }
    }

    assert_eq!(Quiver::loops(2).cycle_invariants(2)[&2], (3, 1));
}

#[test]
fn algebra_bases() {
    for n in 1..=5 {
        let b = AlgebraBasis::build(&lam(n, &q())).unwrap();
        assert_eq!(b.dim(), n * n);
        assert!(b.is_associative());
    }
    let loops = AlgebraPresentation::truncated(Quiver::loops(3), 1, &q());
    let b = AlgebraBasis::build(&loops).unwrap();
    assert_eq!(b.dim(), 1);
    assert!(b.elements().iter().all(Path::is_trivial));

    let g = build_auslander(2).unwrap();
    assert_eq!(g.presented().dim(), g.endo().dim());
}

#[test]
fn taft_hopf_and_modules() {
    for n in 1..=2 {
        assert!(verify_hopf_axioms(n).unwrap().all_passed(), "n={n}");
    }
    let t = TaftAlgebra::new(3).unwrap();
    let e1 = t.index(1, 0);
    assert!(t.counit(e1).is_zero());

    let f = q();
    assert_eq!(indec_module(2, IndecLabel::new(0, 0), &f).unwrap().dims(), &[1, 0]);
    let p0 = indec_module(2, IndecLabel::new(0, 1), &f).unwrap();
    assert_eq!(p0.dims(), &[1, 1]);
    assert_eq!(p0.map(0).get(0, 0), f.one());
    let m = indec_module(3, IndecLabel::new(2, 0), &f).unwrap();
    assert_eq!((m.dims(), m.dim()), (&[1usize, 0, 1][..], 2));

    let s0 = indec_module(2, IndecLabel::new(0, 0), &f).unwrap();
    let s1 = indec_module(2, IndecLabel::new(1, 1), &f).unwrap();
    assert_eq!(hom_dim(&s0, &p0).unwrap(), 0);
    assert_eq!(hom_dim(&s1, &p0).unwrap(), 1);
    for l in IndecLabel::all(3) {
        let m = indec_module(3, l, &f).unwrap();
        assert!(hom_dim(&m, &m).unwrap() >= 1);
    }

    let cyc = Field::new(FieldDescriptor::Cyclotomic(2)).unwrap();
    let p = indec_module(2, IndecLabel::new(0, 1), &cyc).unwrap();
    let k = indec_module(2, IndecLabel::new(0, 0), &cyc).unwrap();
    let pk = tensor_module(&p, &k).unwrap();
    assert_eq!(pk.dim(), 2);
    assert_eq!(decompose_serial(&pk).unwrap(), multiset(&[((0, 1), 1)]));
    let pp = tensor_module(&p, &p).unwrap();
    assert_eq!(pp.dim(), 4);
    let pp_dec = decompose_serial(&pp).unwrap();
    assert_eq!(pp_dec, multiset(&[((0, 1), 1), ((1, 0), 1)]));
    assert_eq!(pp_dec, product_formula(2, IndecLabel::new(0, 1), IndecLabel::new(0, 1)));

    assert_eq!(decompose_serial(&m).unwrap(), multiset(&[((2, 0), 1)]));
    let sum = TaftModule::direct_sum(&[p0, s1]).unwrap();
    assert_eq!(decompose_serial(&sum).unwrap(), multiset(&[((0, 1), 1), ((1, 1), 1)]));
}

#[test]
fn hochschild() {
    for n in 2..=4 {
        let hh = hh_closed_form(&HHQuery::new(lam(n, &q()), 5, 3 * n)).unwrap();
        for p in 0..=5 {
            for qq in 0..=3 * n {
                let c = qq / n;
                let expected = if (p, qq) == (0, 0) {
                    n
                } else if qq % n == 0 && c >= 1 && (p == 2 * c || p + 1 == 2 * c) {
                    n - 1
                } else {
                    0
                };
                assert_eq!(hh.get(p, qq), expected, "n={n} p={p} q={qq}");
            }
        }
    }

    let f2 = HHQuery::new(lam(2, &fp(2)), 3, 4);
    let hh = hh_closed_form(&f2).unwrap();
    assert_eq!(hh.get(2, 2), 1);
    assert!(hh.diff(&hh_bar_oracle(&f2).unwrap()).is_empty());

    let triv = AlgebraPresentation::truncated(Quiver::crown(3).unwrap(), 1, &q());
    let hh = hh_closed_form(&HHQuery::new(triv, 4, 4)).unwrap();
    assert_eq!(hh.nonzero(), vec![(0, 0, 3)]);

    let query = HHQuery::new(lam(2, &q()), 4, 4);
    let closed = hh_closed_form(&query).unwrap();
    assert!(closed.diff(&hh_bar_oracle(&query).unwrap()).is_empty());

    let dual = HHQuery::new(AlgebraPresentation::truncated(Quiver::loops(1), 2, &q()), 4, 5);
    assert!(hh_closed_form(&dual).unwrap().diff(&hh_bar_oracle(&dual).unwrap()).is_empty());

    let free = HHQuery::new(AlgebraPresentation::truncated(Quiver::crown(3).unwrap(), 0, &q()), 2, 6);
    let hh = hh_closed_form(&free).unwrap();
    let expected = vec![(0, 0, 3), (0, 3, 1), (1, 3, 1), (0, 6, 1), (1, 6, 1)];
    assert_eq!(hh.nonzero(), expected);
    assert!(hh.diff(&hh_bar_oracle(&free).unwrap()).is_empty());
}

#[test]
fn cyclic() {
    for n in 2..=6 {
        let hc = hc_closed_form(&HCQuery::new(lam(n, &q()), 5)).unwrap();
        for m in 0..=5 {
            assert_eq!(hc.total(m), if m % 2 == 0 { n } else { n - 1 }, "n={n} m={m}");
        }
    }
    let triv = AlgebraPresentation::truncated(Quiver::crown(2).unwrap(), 1, &q());
    let hc = hc_closed_form(&HCQuery::new(triv.clone(), 4)).unwrap();
    for m in 0..=4 {
        assert_eq!(hc.total(m), if m % 2 == 0 { 2 } else { 0 });
    }

    let oracle = hc_bicomplex_oracle(&HCQuery::new(lam(2, &q()), 2).with_max_q(4)).unwrap();
    assert_eq!((oracle.total(0), oracle.total(1), oracle.total(2)), (2, 1, 2));
    let oracle = hc_bicomplex_oracle(&HCQuery::new(lam(3, &q()), 1)).unwrap();
    assert_eq!((oracle.total(0), oracle.total(1)), (3, 2));
    let oracle = hc_bicomplex_oracle(&HCQuery::new(triv, 2)).unwrap();
    assert_eq!((oracle.total(0), oracle.total(1), oracle.total(2)), (2, 0, 2));

    let query = HHQuery::new(lam(3, &q()), 4, 9);
    let hh = hh_closed_form(&query).unwrap();
    let hc = hc_from_hh(&hh, 3).unwrap();
    assert!(sbi_consistent(&hh, &hc, 3));

    let err = hc_closed_form(&HCQuery::new(lam(2, &fp(3)), 2));
    assert!(err.is_err());

    let b = oracle_basis(&lam(2, &q()), 6).unwrap();
    assert!(verify_sigma_cycle(&b, 0, 0, &[1]).unwrap());
    assert!(verify_sigma_cycle(&b, 0, 1, &[-2, 1, 1]).unwrap());
    assert!(!verify_sigma_cycle(&b, 0, 1, &[-2, 1, 2]).unwrap());
}

#[test]
fn auslander() {
    let g = build_auslander(2).unwrap();
    assert_eq!((g.quiver().num_vertices(), g.quiver().num_arrows()), (4, 4));
    let irreducible: usize = g.endo().irreducible.iter().flatten().sum();
    assert_eq!(irreducible, 4);
    assert_eq!(g.presented().cartan_matrix(), g.endo().hom_dims);

    let g3 = build_auslander(3).unwrap();
    assert_eq!(g3.quiver().num_vertices(), 9);

    for n in 2..=4 {
        let g = build_auslander(n).unwrap();
        let ext = ext_table(&g).unwrap();
        let terms = happel_terms(&ext);
        let count = |p: usize| -> usize { terms[p].values().sum() };
        assert_eq!((count(0), count(2), count(3)), (n * n, n * n - n, 0), "n={n}");
    }

    let (hh, _) = gamma_homology(&g, 2);
    assert_eq!((hh.total(0), hh.total(1), hh.total(2)), (4, 0, 0));
    assert_eq!(happel_homology(&g).unwrap().total(0), 4);
    let (_, hc) = gamma_homology(&g3, 2);
    assert_eq!((hc.total(0), hc.total(1), hc.total(2)), (9, 0, 9));

    let closed = gamma_homology(&g, 3);
    let oracle = gamma_homology_oracle(&g, 3).unwrap();
    assert!(closed.0.diff(&oracle.0).is_empty());
    assert!(closed.1.diff(&oracle.1).is_empty());
}

#[test]
fn grothendieck_and_chern() {
    assert_eq!(sigma_coefficients(0).unwrap(), vec![1]);
    assert_eq!(sigma_coefficients(1).unwrap(), vec![-2, 1, 1]);
    assert_eq!(sigma_coefficients(2).unwrap(), vec![12, -6, -2, 1, 1]);

    let ring = K0Ring::ProjLambda(3);
    for p in 0..3 {
        for j in 0..3 {
            let c = chern(&K0Element::projective(ring, j).unwrap(), p).vector();
            let e: Vec<BigRational> = (0..3).map(|k| BigRational::from_integer(BigInt::from(i64::from(k == j)))).collect();
            assert_eq!(c, e);
        }
    }
    let x = K0Element::parse(ring, "2*P[0] + P[1]").unwrap();
    let ints: Vec<BigRational> = [2, 1, 0].iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect();
    assert_eq!(chern(&x, 1).vector(), ints);

    let factors = vec![K0Element::projective(ring, 0).unwrap(), K0Element::projective(ring, 2).unwrap()];
    let ch = chern_of_tensor(&factors, 1).unwrap();
    assert_eq!(ch, chern_tensor_prediction(&factors, 1).unwrap());
    assert_eq!(ch.vector(), vec![BigRational::from_integer(BigInt::from(1)); 3]);

    let all = K0Ring::AllLambda(2);
    let p01 = K0Element::basis(all, IndecLabel::new(0, 1)).unwrap();
    let prod = k0_product(&p01, &p01).unwrap();
    let expected: BTreeMap<IndecLabel, i64> = [(IndecLabel::new(0, 1), 1), (IndecLabel::new(1, 0), 1)].into();
    assert_eq!(prod.coeffs(), &expected);
    assert_eq!(k0_product(&prod, &K0Element::unit(all)).unwrap(), prod);

    for n in 2..=3 {
        for a in IndecLabel::all(n) {
            let unit = k0_product_oracle(IndecLabel::new(0, 0), a, n).unwrap();
            assert_eq!(unit, multiset(&[((a.i, a.u), 1)]));
        }
    }
    let m = k0_product_oracle(IndecLabel::new(0, 1), IndecLabel::new(1, 0), 2).unwrap();
    let dim: usize = m.iter().map(|(l, k)| l.len(2) * k).sum();
    assert_eq!(dim, 4);
    for n in 2..=4 {
        assert!(product_formula_mismatches(n).unwrap().is_empty(), "n={n}");
    }
}
