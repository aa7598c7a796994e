use proptest::prelude::*;

use hopf_forge::braided::{Ambient, BraidedBialgebra, HModule};
use hopf_forge::catalog::{self, Group};
use hopf_forge::cocycle::{self, Cocycle2, Counital1};
use hopf_forge::hopf;
use hopf_forge::io::Document;
use hopf_forge::linalg;
use hopf_forge::scalar::parse_scalar;
use hopf_forge::tensor::{MultiMap, Space};
use hopf_forge::{FieldSpec, Scalar};

const ORDERS: [u32; 6] = [1, 3, 4, 5, 8, 12];

fn cyc(n: u32, coeffs: &[(i64, i64)]) -> Scalar {
    let mut s = Scalar::zero();
    for (k, &(p, q)) in coeffs.iter().enumerate() {
        s = s + Scalar::zeta_pow(n, k as i64) * Scalar::from_ratio(p, q);
    }
    s
}

fn coeffs() -> impl Strategy<Value = Vec<(i64, i64)>> {
    prop::collection::vec((-9i64..=9, 1i64..=5), 0..6)
}

fn field_element() -> impl Strategy<Value = (u32, Vec<(i64, i64)>, Vec<(i64, i64)>, Vec<(i64, i64)>)> {
    (prop::sample::select(ORDERS.to_vec()), coeffs(), coeffs(), coeffs())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms((n, a, b, c) in field_element()) {
        let (a, b, c) = (cyc(n, &a), cyc(n, &b), cyc(n, &c));
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inv().unwrap()).is_one());
        }
    }

    #[test]
    fn print_then_parse_is_identity((n, a, _, _) in field_element()) {
        let a = cyc(n, &a);
        let f = FieldSpec::Cyclotomic(n);
        prop_assert_eq!(parse_scalar(&a.to_canonical_string("q"), &f).unwrap(), a);
    }

    #[test]
    fn roots_of_unity(n in 2u32..=16) {
        let z = Scalar::zeta(n);
        prop_assert!(z.pow(n as i64).unwrap().is_one());
        let mut sum = Scalar::zero();
        for k in 0..n {
            sum = sum + Scalar::zeta_pow(n, k as i64);
        }
        prop_assert!(sum.is_zero());
    }
}

fn space(name: &str, d: usize) -> Space {
    Space::numbered(name, "e", d)
}

fn sparse_map(dom: &[Space], cod: &[Space], vals: &[i64]) -> MultiMap {
    let mut k = 0;
    MultiMap::from_fn(dom, cod, |_| {
        let mut out = Vec::new();
        for c in hopf_forge::tensor::multi_indices(cod) {
            let v = vals[k % vals.len()];
            k += 1;
            if v != 0 {
                out.push((c, Scalar::from_int(v)));
            }
        }
        out
    })
}

fn vals() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(prop_oneof![3 => Just(0i64), 2 => -3i64..=3], 1..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn compose_is_associative_and_tensor_functorial(a in vals(), b in vals(), c in vals(), d in vals()) {
        let (u, v, w, x) = (space("U", 2), space("V", 3), space("W", 2), space("X", 3));
        let f = sparse_map(&[u.clone()], &[v.clone()], &a);
        let g = sparse_map(&[v.clone()], &[w.clone()], &b);
        let h = sparse_map(&[w.clone()], &[x.clone()], &c);
        prop_assert_eq!(f.then(&g).then(&h), f.then(&g.then(&h)));
        let f2 = sparse_map(&[x.clone()], &[u.clone()], &d);
        // (g∘f)⊗(f2∘h) = (g⊗f2)∘(f⊗h)
        let lhs = f.then(&g).tensor(&h.then(&f2));
        let rhs = f.tensor(&h).then(&g.tensor(&f2));
        prop_assert_eq!(&lhs, &rhs);
        for m in [&f, &g, &h, &lhs] {
            prop_assert!(m.entries().values().all(|s| !s.is_zero()));
        }
    }
}

fn group_functional(b: &BraidedBialgebra, vals: &[i64]) -> MultiMap {
    let n = b.dim();
    MultiMap::from_fn(&[b.space().clone(), b.space().clone()], &[], |d| {
        let v = if d[0] == 0 || d[1] == 0 { 1 } else { vals[(d[0] as usize - 1) * (n - 1) + d[1] as usize - 1] };
        vec![(vec![], Scalar::from_int(v))]
    })
}

fn nonzero() -> impl Strategy<Value = i64> {
    prop_oneof![-2i64..=-1, 1i64..=2]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// On kZ3 a normalized functional twists to an associative product
    /// exactly when it is a cocycle.
    #[test]
    fn twist_is_associative_iff_cocycle(v in prop::collection::vec(nonzero(), 4)) {
        let b = BraidedBialgebra::from_hopf(&catalog::group_algebra(&Group::cyclic(3)));
        let sigma = group_functional(&b, &v);
        let s = Cocycle2::new(&b, sigma.clone()).unwrap();
        let is_cocycle = cocycle::check_cocycle(&s).passed();
        let assoc = hopf::check_algebra(&cocycle::twisted_algebra_raw(&b, &sigma)).passed();
        prop_assert_eq!(is_cocycle, assoc);
    }

    #[test]
    fn bicharacters_are_cocycles(m in prop::collection::vec(0i64..3, 4)) {
        let s = catalog::bicharacter_cocycle(3, &[m[..2].to_vec(), m[2..].to_vec()]).unwrap();
        prop_assert!(cocycle::check_cocycle(&s).passed());
    }

    /// Shifting a cocycle by a counital β gives a cohomologous cocycle, and
    /// the decision procedure recovers some β.
    #[test]
    fn coboundary_shift(v in prop::collection::vec(nonzero(), 3), m in 0i64..4) {
        let s = catalog::bicharacter_cocycle(4, &[vec![m]]).unwrap();
        let b = s.over.clone();
        let beta = MultiMap::from_fn(&[b.space().clone()], &[], |d| vec![(vec![], Scalar::from_int(if d[0] == 0 { 1 } else { v[d[0] as usize - 1] }))]);
        let beta = Counital1::new(&b, beta).unwrap();
        let t = cocycle::twist_cocycle(&s, &beta).unwrap();
        prop_assert!(cocycle::check_cocycle(&t).passed());
        prop_assert!(cocycle::cohomologous_iso(&s, &t, &beta).is_ok());
        let found = cocycle::find_coboundary(&s, &t).expect("β exists");
        prop_assert_eq!(cocycle::twist_cocycle(&s, &found).unwrap().sigma, t.sigma);
    }

    /// Convolution inverses of random invertible functionals verify on both sides.
    #[test]
    fn convolution_inverse_two_sided(v in prop::collection::vec(nonzero(), 3)) {
        let h = catalog::group_algebra(&Group::cyclic(4));
        let f = MultiMap::from_fn(&[h.space.clone()], &[], |d| vec![(vec![], Scalar::from_int(if d[0] == 0 { 1 } else { v[d[0] as usize - 1] }))]);
        let one = MultiMap::scalar(Scalar::one());
        let g = linalg::solve_convolution_inverse(&f, &one, &one, &h.comult, &h.counit).unwrap();
        prop_assert_eq!(linalg::convolve(&f, &g, &h.comult, &one), h.counit.clone());
        prop_assert_eq!(linalg::convolve(&g, &f, &h.comult, &one), h.counit.clone());
    }

    /// Hexagons, invertibility and naturality of the braiding for the
    /// cyclic R-matrices on one-dimensional modules.
    #[test]
    fn braiding_axioms(k in prop::sample::select(vec![1i64, 2]), a in 0u32..5, b in 0u32..5, c in 0u32..5) {
        let n = 5;
        let qt = catalog::cyclic_qt(n, k).unwrap();
        let amb = Ambient::new(qt);
        let h = amb.hspace().clone();
        let line = |w: u32, name: &str| {
            let sp = Space::new(name, vec!["v".into()]);
            let action = MultiMap::from_fn(&[h.clone(), sp.clone()], &[sp.clone()], |d| vec![(vec![0], Scalar::zeta_pow(n as u32, (d[0] * w) as i64))]);
            HModule { legs: vec![sp], action }
        };
        let (u, v, w) = (line(a, "U"), line(b, "V"), line(c, "W"));
        let u2 = line(a, "U'");
        let f = MultiMap::from_fn(&u.legs, &u2.legs, |_| vec![(vec![0], Scalar::from_int(3))]);
        let rep = amb.check_braiding(&u, &v, &w, Some((&f, &u2)));
        prop_assert!(rep.passed(), "{}", rep);
    }

    /// load ∘ save is the identity and save is canonical.
    #[test]
    fn document_round_trip(v in vals(), w in vals()) {
        let (x, y) = (space("X", 2), space("Y", 3));
        let f = sparse_map(&[x.clone(), y.clone()], &[y.clone()], &v);
        let g = sparse_map(&[], &[x.clone(), x.clone()], &w);
        let mut doc = Document::new();
        doc.add_map("f", &f).unwrap();
        doc.add_map("g", &g).unwrap();
        let text = doc.to_json();
        let again = Document::from_json(&text).unwrap();
        prop_assert_eq!(again.map("f").unwrap(), &f);
        prop_assert_eq!(again.map("g").unwrap(), &g);
        prop_assert_eq!(again.to_json(), text);
    }
}
