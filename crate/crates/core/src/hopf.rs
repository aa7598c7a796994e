//! Ordinary algebras, coalgebras, bialgebras and Hopf algebras given by
//! structure constants, with axiom checks, convolution, duals and
//! (dual) quasitriangular structures.

use crate::linalg::{self, ConvolutionError, SparseSystem};
use crate::network::Net;
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{flatten, multi_indices, unflatten, MultiMap, Space};

#[derive(Clone, Debug)]
pub struct Algebra {
    pub space: Space,
    pub mult: MultiMap,
    pub unit: MultiMap,
}

#[derive(Clone, Debug)]
pub struct Coalgebra {
    pub space: Space,
    pub comult: MultiMap,
    pub counit: MultiMap,
}

/// Bialgebra on one based space; `antipode` is present for Hopf algebras.
#[derive(Clone, Debug)]
pub struct Bialgebra {
    pub space: Space,
    pub mult: MultiMap,
    pub unit: MultiMap,
    pub comult: MultiMap,
    pub counit: MultiMap,
    pub antipode: Option<MultiMap>,
    pub antipode_inv: Option<MultiMap>,
}

pub type HopfData = Bialgebra;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum HopfError {
    #[error("not a Hopf algebra: the identity has no convolution inverse ({0})")]
    NotHopf(ConvolutionError),
    #[error("antipode is not invertible")]
    AntipodeNotInvertible,
}

impl Bialgebra {
    pub fn new(space: Space, mult: MultiMap, unit: MultiMap, comult: MultiMap, counit: MultiMap) -> Bialgebra {
        Bialgebra { space, mult, unit, comult, counit, antipode: None, antipode_inv: None }
    }

    /// Attach the antipode found by linear solve, and its inverse.
    pub fn into_hopf(mut self) -> Result<Bialgebra, HopfError> {
        let s = find_antipode(&self)?;
        let si = linalg::inverse(&s).ok_or(HopfError::AntipodeNotInvertible)?;
        self.antipode = Some(s);
        self.antipode_inv = Some(si);
        Ok(self)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_hopf(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn s(&self) -> &MultiMap {
        self.antipode.as_ref().expect("Hopf algebra required")
    }

    pub fn s_inv(&self) -> &MultiMap {
        self.antipode_inv.as_ref().expect("Hopf algebra with invertible antipode required")
    }

    pub fn algebra(&self) -> Algebra {
        Algebra { space: self.space.clone(), mult: self.mult.clone(), unit: self.unit.clone() }
    }

    pub fn coalgebra(&self) -> Coalgebra {
        Coalgebra { space: self.space.clone(), comult: self.comult.clone(), counit: self.counit.clone() }
    }

    pub fn identity(&self) -> MultiMap {
        MultiMap::identity(&[self.space.clone()])
    }

    /// u∘ε.
    pub fn unit_counit(&self) -> MultiMap {
        self.unit.compose(&self.counit).unwrap()
    }

    /// Same algebra, opposite coproduct (antipode becomes S⁻¹).
    pub fn cop(&self) -> Bialgebra {
        let b = &self.space;
        let comult = self.comult.then(&MultiMap::flip(b, b));
        Bialgebra {
            space: self.space.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode_inv.clone(),
            antipode_inv: self.antipode.clone(),
        }
    }

    /// Same coalgebra, opposite product.
    pub fn op(&self) -> Bialgebra {
        let b = &self.space;
        let mult = MultiMap::flip(b, b).then(&self.mult);
        Bialgebra { mult, antipode: self.antipode_inv.clone(), antipode_inv: self.antipode.clone(), ..self.clone() }
    }

    /// Relabel onto a new space of equal dimension.
    pub fn on_space(&self, sp: &Space) -> Bialgebra {
        let one = std::slice::from_ref(sp);
        let two = [sp.clone(), sp.clone()];
        Bialgebra {
            space: sp.clone(),
            mult: self.mult.relabel(&two, one),
            unit: self.unit.relabel(&[], one),
            comult: self.comult.relabel(one, &two),
            counit: self.counit.relabel(one, &[]),
            antipode: self.antipode.as_ref().map(|s| s.relabel(one, one)),
            antipode_inv: self.antipode_inv.as_ref().map(|s| s.relabel(one, one)),
        }
    }

    /// Multiplication of B⊗B as an ordinary tensor product algebra:
    /// (a⊗b)(a′⊗b′) = aa′⊗bb′, legs ordered (a, b, a′, b′).
    pub fn mult_pair(&self) -> MultiMap {
        let mut n = Net::new();
        let x = n.inputs(&[self.space.clone(), self.space.clone(), self.space.clone(), self.space.clone()]);
        let p = n.apply1(&self.mult, &[x[0], x[2]]);
        let q = n.apply1(&self.mult, &[x[1], x[3]]);
        n.eval(&[p, q])
    }

    pub fn unit_pair(&self) -> MultiMap {
        self.unit.tensor(&self.unit)
    }

    /// Coproduct of B⊗B: (a, b) ↦ (a₁, b₁, a₂, b₂).
    pub fn comult_pair(&self) -> MultiMap {
        let mut n = Net::new();
        let x = n.inputs(&[self.space.clone(), self.space.clone()]);
        let a = n.apply(&self.comult, &[x[0]]);
        let b = n.apply(&self.comult, &[x[1]]);
        n.eval(&[a[0], b[0], a[1], b[1]])
    }

    pub fn counit_pair(&self) -> MultiMap {
        self.counit.tensor(&self.counit)
    }

    /// Basis element by label.
    pub fn element(&self, label: &str) -> MultiMap {
        let i = self.space.index_of(label).unwrap_or_else(|| panic!("no basis element `{label}` in {}", self.space.name()));
        MultiMap::basis_vector(&[self.space.clone()], &[i as u32])
    }

    /// Product of two elements (maps ∅ → B).
    pub fn mul(&self, a: &MultiMap, b: &MultiMap) -> MultiMap {
        a.tensor(b).then(&self.mult)
    }
}

fn assoc_sides(space: &Space, mult: &MultiMap) -> (MultiMap, MultiMap) {
    let sp = [space.clone(), space.clone(), space.clone()];
    let mut n = Net::new();
    let x = n.inputs(&sp);
    let ab = n.apply1(mult, &[x[0], x[1]]);
    let l = n.apply1(mult, &[ab, x[2]]);
    let lhs = n.eval(&[l]);
    let mut n = Net::new();
    let x = n.inputs(&sp);
    let bc = n.apply1(mult, &[x[1], x[2]]);
    let r = n.apply1(mult, &[x[0], bc]);
    (lhs, n.eval(&[r]))
}

pub fn check_algebra(a: &Algebra) -> Report {
    let mut rep = Report::new(format!("algebra {}", a.space.name()));
    let (l, r) = assoc_sides(&a.space, &a.mult);
    rep.equal("associativity", &l, &r);
    let id = MultiMap::identity(&[a.space.clone()]);
    rep.equal("left unit", &a.unit.tensor(&id).then(&a.mult), &id);
    rep.equal("right unit", &id.tensor(&a.unit).then(&a.mult), &id);
    rep
}

pub fn check_coalgebra(c: &Coalgebra) -> Report {
    let mut rep = Report::new(format!("coalgebra {}", c.space.name()));
    let id = MultiMap::identity(&[c.space.clone()]);
    let l = c.comult.then(&c.comult.tensor(&id));
    let r = c.comult.then(&id.tensor(&c.comult));
    rep.equal("coassociativity", &l, &r);
    rep.equal("left counit", &c.comult.then(&c.counit.tensor(&id)), &id);
    rep.equal("right counit", &c.comult.then(&id.tensor(&c.counit)), &id);
    rep
}

pub fn check_bialgebra(b: &Bialgebra) -> Report {
    let mut rep = Report::new(format!("bialgebra {}", b.space.name()));
    rep.absorb("", check_algebra(&b.algebra()));
    rep.absorb("", check_coalgebra(&b.coalgebra()));
    let lhs = b.mult.then(&b.comult);
    let rhs = crate::network::then_parallel(&b.comult_pair(), &[&b.mult, &b.mult]);
    rep.equal("comultiplication is multiplicative", &lhs, &rhs);
    rep.equal("comultiplication preserves unit", &b.unit.then(&b.comult), &b.unit.tensor(&b.unit));
    rep.equal("counit is multiplicative", &b.mult.then(&b.counit), &b.counit.tensor(&b.counit));
    rep.equal("counit of unit", &b.unit.then(&b.counit), &MultiMap::scalar(Scalar::one()));
    rep
}

/// Bialgebra checks plus antipode axioms, invertibility, and agreement with
/// the antipode recomputed by linear solve.
pub fn check_hopf(b: &Bialgebra) -> Report {
    let mut rep = check_bialgebra(b);
    rep.subject = format!("Hopf algebra {}", b.space.name());
    let Some(s) = &b.antipode else {
        rep.check("antipode present", false, None);
        return rep;
    };
    let id = b.identity();
    let ue = b.unit_counit();
    rep.equal("antipode left", &linalg::convolve(s, &id, &b.comult, &b.mult), &ue);
    rep.equal("antipode right", &linalg::convolve(&id, s, &b.comult, &b.mult), &ue);
    match &b.antipode_inv {
        Some(si) => {
            rep.equal("antipode inverse left", &s.then(si), &id);
            rep.equal("antipode inverse right", &si.then(s), &id);
        }
        None => {
            rep.check("antipode inverse present", false, None);
        }
    }
    match find_antipode(b) {
        Ok(solved) => {
            rep.equal("antipode equals solved convolution inverse", s, &solved);
        }
        Err(e) => {
            rep.check("antipode equals solved convolution inverse", false, Some(e.to_string()));
        }
    }
    rep
}

/// φ∗ψ = m_A(φ⊗ψ)Δ_C.
pub fn convolution(f: &MultiMap, g: &MultiMap, c: &Coalgebra, a: &Algebra) -> MultiMap {
    linalg::convolve(f, g, &c.comult, &a.mult)
}

pub fn find_antipode(b: &Bialgebra) -> Result<MultiMap, HopfError> {
    linalg::solve_convolution_inverse(&b.identity(), &b.mult, &b.unit, &b.comult, &b.counit).map_err(HopfError::NotHopf)
}

/// Dual Hopf algebra on the dual basis: (e·f)(h) = e(h₁)f(h₂), (Δf)(h⊗g) = f(hg).
pub fn dual_hopf(b: &Bialgebra, name: &str) -> Bialgebra {
    let labels = b.space.labels().iter().map(|l| format!("d{l}")).collect();
    let d = Space::new(name, labels);
    let one = [d.clone()];
    let two = [d.clone(), d.clone()];
    let t = |m: &MultiMap, dom: &[Space], cod: &[Space]| m.transpose().relabel(dom, cod);
    Bialgebra {
        space: d.clone(),
        mult: t(&b.comult, &two, &one),
        unit: t(&b.counit, &[], &one),
        comult: t(&b.mult, &one, &two),
        counit: t(&b.unit, &one, &[]),
        antipode: b.antipode.as_ref().map(|s| t(s, &one, &one)),
        antipode_inv: b.antipode_inv.as_ref().map(|s| t(s, &one, &one)),
    }
}

/// Inverse of an element `x: ∅ → A` in an algebra given by `mult`, `unit`
/// on the legs of `x`'s codomain.
pub fn element_inverse(x: &MultiMap, mult: &MultiMap, unit: &MultiMap) -> Option<MultiMap> {
    let legs = x.codomain().to_vec();
    let k = legs.len();
    let n = crate::tensor::total_dim(&legs);
    // left multiplication by x as a matrix: column j = x·e_j
    let mut rows: Vec<Vec<(usize, Scalar)>> = vec![Vec::new(); n];
    for j in multi_indices(&legs) {
        let ej = MultiMap::basis_vector(&legs, &j);
        let prod = x.tensor(&ej).then(mult);
        let jf = flatten(&legs, &j);
        for (c, _, v) in prod.iter() {
            rows[flatten(&legs, c)].push((jf, v.clone()));
        }
    }
    let mut sys = SparseSystem::new(n, 1);
    let rhs: std::collections::HashMap<usize, Scalar> = unit.iter().map(|(c, _, v)| (flatten(&legs, c), v.clone())).collect();
    for (i, r) in rows.into_iter().enumerate() {
        sys.add_row(r, rhs.get(&i).map(|v| vec![(0, v.clone())]).unwrap_or_default());
    }
    let sol = sys.solve()?;
    let y = MultiMap::vector(&legs, sol.iter().enumerate().filter(|(_, v)| !v[0].is_zero()).map(|(i, v)| (unflatten(&legs, i), v[0].clone())).collect());
    let _ = k;
    let check = |a: &MultiMap, b: &MultiMap| a.tensor(b).then(mult) == *unit;
    (check(x, &y) && check(&y, x)).then_some(y)
}

/// Product of two elements of H⊗H, leg by leg.
pub fn pair_product(mult: &MultiMap, a: &MultiMap, b: &MultiMap) -> MultiMap {
    let mut n = Net::new();
    let x = n.apply(a, &[]);
    let y = n.apply(b, &[]);
    let l = n.apply1(mult, &[x[0], y[0]]);
    let r = n.apply1(mult, &[x[1], y[1]]);
    n.eval(&[l, r])
}

/// Quasitriangular Hopf algebra (H, R).
#[derive(Clone, Debug)]
pub struct QuasiTriangular {
    pub h: Bialgebra,
    pub r: MultiMap,
    pub r_inv: MultiMap,
}

impl QuasiTriangular {
    /// Attach R and compute its inverse in H⊗H.
    pub fn new(h: Bialgebra, r: MultiMap) -> Option<QuasiTriangular> {
        let u2 = h.unit_pair();
        // (S⊗id)R is the inverse whenever R is quasitriangular; solve otherwise
        let guess = h.antipode.as_ref().map(|s| {
            let mut n = Net::new();
            let x = n.apply(&r, &[]);
            let y = n.apply1(s, &[x[0]]);
            n.eval(&[y, x[1]])
        });
        let r_inv = match guess {
            Some(g) if pair_product(&h.mult, &r, &g) == u2 && pair_product(&h.mult, &g, &r) == u2 => g,
            _ => element_inverse(&r, &h.mult_pair(), &u2)?,
        };
        Some(QuasiTriangular { h, r, r_inv })
    }

    /// H = k with R = 1⊗1.
    pub fn trivial() -> QuasiTriangular {
        let k = Space::new("k", vec!["1".into()]);
        let one = |d: &[Space], c: &[Space]| MultiMap::from_triples(d, c, vec![(vec![0; c.len()], vec![0; d.len()], Scalar::one())]);
        let s = [k.clone()];
        let h = Bialgebra {
            space: k.clone(),
            mult: one(&[k.clone(), k.clone()], &s),
            unit: one(&[], &s),
            comult: one(&s, &[k.clone(), k.clone()]),
            counit: one(&s, &[]),
            antipode: Some(one(&s, &s)),
            antipode_inv: Some(one(&s, &s)),
        };
        let r = one(&[], &[k.clone(), k.clone()]);
        QuasiTriangular { h, r: r.clone(), r_inv: r }
    }

    pub fn is_trivial(&self) -> bool {
        self.h.dim() == 1
    }
}

pub fn check_quasitriangular(qt: &QuasiTriangular) -> Report {
    let h = &qt.h;
    let sp = h.space.clone();
    let mut rep = Report::new(format!("quasitriangular structure on {}", sp.name()));
    // (Δ⊗id)R = R₁₃R₂₃
    let mut n = Net::new();
    let r = n.apply(&qt.r, &[]);
    let d = n.apply(&h.comult, &[r[0]]);
    let lhs = n.eval(&[d[0], d[1], r[1]]);
    let mut n = Net::new();
    let r1 = n.apply(&qt.r, &[]);
    let r2 = n.apply(&qt.r, &[]);
    let u = n.apply1(&h.mult, &[r1[1], r2[1]]);
    let rhs = n.eval(&[r1[0], r2[0], u]);
    rep.equal("coproduct on first leg", &lhs, &rhs);
    // (id⊗Δ)R = R₁₃R₁₂
    let mut n = Net::new();
    let r = n.apply(&qt.r, &[]);
    let d = n.apply(&h.comult, &[r[1]]);
    let lhs = n.eval(&[r[0], d[0], d[1]]);
    let mut n = Net::new();
    let r1 = n.apply(&qt.r, &[]);
    let r2 = n.apply(&qt.r, &[]);
    let u = n.apply1(&h.mult, &[r1[0], r2[0]]);
    let rhs = n.eval(&[u, r2[1], r1[1]]);
    rep.equal("coproduct on second leg", &lhs, &rhs);
    // R Δ(x) = Δ^op(x) R
    let mut n = Net::new();
    let x = n.input(&sp);
    let d = n.apply(&h.comult, &[x]);
    let r = n.apply(&qt.r, &[]);
    let a = n.apply1(&h.mult, &[r[0], d[0]]);
    let b = n.apply1(&h.mult, &[r[1], d[1]]);
    let lhs = n.eval(&[a, b]);
    let mut n = Net::new();
    let x = n.input(&sp);
    let d = n.apply(&h.comult, &[x]);
    let r = n.apply(&qt.r, &[]);
    let a = n.apply1(&h.mult, &[d[1], r[0]]);
    let b = n.apply1(&h.mult, &[d[0], r[1]]);
    let rhs = n.eval(&[a, b]);
    rep.equal("quasi-cocommutativity", &lhs, &rhs);
    let one = h.unit_pair();
    rep.equal("R times inverse", &pair_product(&h.mult, &qt.r, &qt.r_inv), &one);
    rep.equal("inverse times R", &pair_product(&h.mult, &qt.r_inv, &qt.r), &one);
    rep
}

/// Dual quasitriangular Hopf algebra (H, r) with r: H⊗H → k.
#[derive(Clone, Debug)]
pub struct DualQuasiTriangular {
    pub h: Bialgebra,
    pub r: MultiMap,
    pub r_inv: MultiMap,
}

impl DualQuasiTriangular {
    pub fn new(h: Bialgebra, r: MultiMap) -> Result<DualQuasiTriangular, ConvolutionError> {
        let r_inv = linalg::solve_convolution_inverse(&r, &MultiMap::scalar(Scalar::one()), &MultiMap::scalar(Scalar::one()), &h.comult_pair(), &h.counit_pair())?;
        Ok(DualQuasiTriangular { h, r, r_inv })
    }
}

pub fn check_dual_quasitriangular(d: &DualQuasiTriangular) -> Report {
    let h = &d.h;
    let sp = h.space.clone();
    let three = [sp.clone(), sp.clone(), sp.clone()];
    let mut rep = Report::new(format!("dual quasitriangular structure on {}", sp.name()));
    // r(ab, c) = r(a, c₁) r(b, c₂)
    let mut n = Net::new();
    let x = n.inputs(&three);
    let ab = n.apply1(&h.mult, &[x[0], x[1]]);
    n.apply(&d.r, &[ab, x[2]]);
    let lhs = n.eval(&[]);
    let mut n = Net::new();
    let x = n.inputs(&three);
    let c = n.apply(&h.comult, &[x[2]]);
    n.apply(&d.r, &[x[0], c[0]]);
    n.apply(&d.r, &[x[1], c[1]]);
    let rhs = n.eval(&[]);
    rep.equal("product in first argument", &lhs, &rhs);
    // r(a, bc) = r(a₁, c) r(a₂, b)
    let mut n = Net::new();
    let x = n.inputs(&three);
    let bc = n.apply1(&h.mult, &[x[1], x[2]]);
    n.apply(&d.r, &[x[0], bc]);
    let lhs = n.eval(&[]);
    let mut n = Net::new();
    let x = n.inputs(&three);
    let a = n.apply(&h.comult, &[x[0]]);
    n.apply(&d.r, &[a[0], x[2]]);
    n.apply(&d.r, &[a[1], x[1]]);
    let rhs = n.eval(&[]);
    rep.equal("product in second argument", &lhs, &rhs);
    // a₂b₂ r(a₁, b₁) = b₁a₁ r(a₂, b₂)
    let two = [sp.clone(), sp.clone()];
    let mut n = Net::new();
    let x = n.inputs(&two);
    let a = n.apply(&h.comult, &[x[0]]);
    let b = n.apply(&h.comult, &[x[1]]);
    n.apply(&d.r, &[a[0], b[0]]);
    let p = n.apply1(&h.mult, &[a[1], b[1]]);
    let lhs = n.eval(&[p]);
    let mut n = Net::new();
    let x = n.inputs(&two);
    let a = n.apply(&h.comult, &[x[0]]);
    let b = n.apply(&h.comult, &[x[1]]);
    n.apply(&d.r, &[a[1], b[1]]);
    let p = n.apply1(&h.mult, &[b[0], a[0]]);
    let rhs = n.eval(&[p]);
    rep.equal("quasi-commutativity", &lhs, &rhs);
    let k = MultiMap::scalar(Scalar::one());
    let ee = h.counit_pair();
    rep.equal("r convolved with inverse", &linalg::convolve(&d.r, &d.r_inv, &h.comult_pair(), &k), &ee);
    rep.equal("inverse convolved with r", &linalg::convolve(&d.r_inv, &d.r, &h.comult_pair(), &k), &ee);
    rep
}

#[cfg(test)]
mod tests {
    use super::*;

    /// kZ/n in the group basis.
    fn cyclic(n: u32) -> Bialgebra {
        let sp = Space::new("G", (0..n).map(|i| format!("g{i}")).collect());
        let s = [sp.clone()];
        let two = [sp.clone(), sp.clone()];
        let mult = MultiMap::from_fn(&two, &s, |d| vec![(vec![(d[0] + d[1]) % n], Scalar::one())]);
        let unit = MultiMap::basis_vector(&s, &[0]);
        let comult = MultiMap::from_fn(&s, &two, |d| vec![(vec![d[0], d[0]], Scalar::one())]);
        let counit = MultiMap::from_fn(&s, &[], |_| vec![(vec![], Scalar::one())]);
        Bialgebra::new(sp, mult, unit, comult, counit)
    }

    #[test]
    fn group_algebra_is_hopf() {
        let b = cyclic(3).into_hopf().unwrap();
        assert!(check_hopf(&b).passed(), "{}", check_hopf(&b));
        // S(g) = g⁻¹
        let s = b.s();
        assert_eq!(s.get(&[2], &[1]), Scalar::one());
        assert_eq!(s.get(&[0], &[0]), Scalar::one());
    }

    #[test]
    fn id_convolved_with_itself_squares() {
        let b = cyclic(3);
        let sq = convolution(&b.identity(), &b.identity(), &b.coalgebra(), &b.algebra());
        assert_eq!(sq.get(&[2], &[1]), Scalar::one());
        assert_eq!(sq.get(&[1], &[2]), Scalar::one());
    }

    #[test]
    fn corrupted_mult_fails_with_witness() {
        let mut b = cyclic(3);
        let sp = b.space.clone();
        // g1·g1 := g0 instead of g2
        let fix = MultiMap::from_triples(&[sp.clone(), sp.clone()], &[sp.clone()], vec![(vec![0], vec![1, 1], Scalar::one()), (vec![2], vec![1, 1], -Scalar::one())]);
        b.mult = b.mult.add(&fix);
        let rep = check_algebra(&b.algebra());
        let item = rep.item("associativity").unwrap();
        assert!(!item.passed);
        assert!(item.witness.is_some());
    }

    #[test]
    fn double_dual_is_original() {
        let b = cyclic(3).into_hopf().unwrap();
        let dd = dual_hopf(&dual_hopf(&b, "D"), "DD");
        assert_eq!(dd.mult, b.mult);
        assert_eq!(dd.comult, b.comult);
        assert_eq!(dd.s(), b.s());
        assert!(check_hopf(&dual_hopf(&b, "D")).passed());
    }

    #[test]
    fn trivial_r_on_cocommutative() {
        let h = cyclic(2).into_hopf().unwrap();
        let r = h.unit_pair();
        let qt = QuasiTriangular::new(h, r).unwrap();
        assert!(check_quasitriangular(&qt).passed());
        assert!(check_quasitriangular(&QuasiTriangular::trivial()).passed());
    }
}
