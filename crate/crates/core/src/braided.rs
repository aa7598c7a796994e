//! The braided category of left modules over a quasitriangular Hopf algebra
//! (H, R): braidings, braided bialgebras, Yetter-Drinfeld modules, algebra
//! and coalgebra objects over B, and the tensor actions of YD modules on
//! relative module categories.

use std::sync::Arc;

use crate::hopf::{Bialgebra, QuasiTriangular};
use crate::linalg;
use crate::network::{Net, Wire};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{MultiMap, Space};

/// Modules over (H, R), braided by R or (with `inverse`) by R₂₁⁻¹.
#[derive(Clone, Debug)]
pub struct Ambient {
    pub qt: Arc<QuasiTriangular>,
    pub inverse: bool,
}

/// A (possibly multi-leg) object of the ambient category: the legs carry a
/// left H-action `H ⊗ legs → legs`.
#[derive(Clone, Debug)]
pub struct HModule {
    pub legs: Vec<Space>,
    pub action: MultiMap,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum BraidedError {
    #[error("objects live over different ambient categories")]
    AmbientMismatch,
    #[error("antipode required: {0}")]
    MissingAntipode(String),
    #[error("{0}")]
    Check(String),
}

impl Ambient {
    pub fn new(qt: QuasiTriangular) -> Ambient {
        Ambient { qt: Arc::new(qt), inverse: false }
    }

    pub fn trivial() -> Ambient {
        Ambient::new(QuasiTriangular::trivial())
    }

    pub fn inverted(&self) -> Ambient {
        Ambient { qt: self.qt.clone(), inverse: !self.inverse }
    }

    pub fn h(&self) -> &Bialgebra {
        &self.qt.h
    }

    pub fn hspace(&self) -> &Space {
        &self.qt.h.space
    }

    pub fn is_trivial(&self) -> bool {
        self.qt.is_trivial()
    }

    /// Same (H, R) up to structure constants; the inverse flag is ignored.
    pub fn same_category(&self, o: &Ambient) -> bool {
        Arc::ptr_eq(&self.qt, &o.qt) || (self.qt.r == o.qt.r && self.qt.h.mult == o.qt.h.mult && self.qt.h.comult == o.qt.h.comult)
    }

    /// The R-matrix whose braiding this ambient uses: R, or R₂₁⁻¹ when inverted.
    pub fn r_matrix(&self) -> MultiMap {
        if self.inverse {
            let h = self.hspace();
            self.qt.r_inv.then(&MultiMap::flip(h, h))
        } else {
            self.qt.r.clone()
        }
    }

    /// Inverse of `r_matrix` in H⊗H.
    pub fn r_matrix_inv(&self) -> MultiMap {
        if self.inverse {
            let h = self.hspace();
            self.qt.r.then(&MultiMap::flip(h, h))
        } else {
            self.qt.r_inv.clone()
        }
    }

    /// Legs carrying the trivial action h·v = ε(h)v.
    pub fn trivial_module(&self, legs: &[Space]) -> HModule {
        let action = self.h().counit.tensor(&MultiMap::identity(legs));
        HModule { legs: legs.to_vec(), action }
    }

    /// The unit object (no legs).
    pub fn unit_object(&self) -> HModule {
        self.trivial_module(&[])
    }

    /// V⊗W with the diagonal action through Δ_H.
    pub fn tensor(&self, v: &HModule, w: &HModule) -> HModule {
        let mut legs = v.legs.clone();
        legs.extend(w.legs.iter().cloned());
        let mut n = Net::new();
        let h = n.input(self.hspace());
        let vi = n.inputs(&v.legs);
        let wi = n.inputs(&w.legs);
        let d = n.apply(&self.h().comult, &[h]);
        let vo = n.apply(&v.action, &cat(&[d[0]], &vi));
        let wo = n.apply(&w.action, &cat(&[d[1]], &wi));
        HModule { legs, action: n.eval(&cat(&vo, &wo)) }
    }

    pub fn tensor_all(&self, objs: &[&HModule]) -> HModule {
        let mut acc = self.unit_object();
        for o in objs {
            acc = self.tensor(&acc, o);
        }
        acc
    }

    /// Ψ_{V,W}: V⊗W → W⊗V, v⊗w ↦ R⁽²⁾▷w ⊗ R⁽¹⁾▷v; in the inverse-braided
    /// category v⊗w ↦ R⁻⁽¹⁾▷w ⊗ R⁻⁽²⁾▷v.
    pub fn braiding(&self, v: &HModule, w: &HModule) -> MultiMap {
        let mut n = Net::new();
        let vi = n.inputs(&v.legs);
        let wi = n.inputs(&w.legs);
        let (wo, vo) = self.braid_wires(&mut n, v, w, &vi, &wi);
        n.eval(&cat(&wo, &vo))
    }

    /// The inverse of `braiding(v, w)`, a map W⊗V → V⊗W.
    pub fn braiding_inverse(&self, v: &HModule, w: &HModule) -> MultiMap {
        let mut n = Net::new();
        let wi = n.inputs(&w.legs);
        let vi = n.inputs(&v.legs);
        let (vo, wo) = self.unbraid_wires(&mut n, v, w, &wi, &vi);
        n.eval(&cat(&vo, &wo))
    }

    /// Place Ψ_{V,W} on wires; returns (w-wires, v-wires).
    pub fn braid_wires(&self, n: &mut Net, v: &HModule, w: &HModule, vi: &[Wire], wi: &[Wire]) -> (Vec<Wire>, Vec<Wire>) {
        if self.is_trivial() {
            return (wi.to_vec(), vi.to_vec());
        }
        let (r, first_to_v) = if self.inverse { (&self.qt.r_inv, false) } else { (&self.qt.r, true) };
        let rr = n.apply(r, &[]);
        let (rv, rw) = if first_to_v { (rr[0], rr[1]) } else { (rr[1], rr[0]) };
        let wo = n.apply(&w.action, &cat(&[rw], wi));
        let vo = n.apply(&v.action, &cat(&[rv], vi));
        (wo, vo)
    }

    /// Place Ψ_{V,W}⁻¹ on wires (inputs W then V); returns (v-wires, w-wires).
    pub fn unbraid_wires(&self, n: &mut Net, v: &HModule, w: &HModule, wi: &[Wire], vi: &[Wire]) -> (Vec<Wire>, Vec<Wire>) {
        if self.is_trivial() {
            return (vi.to_vec(), wi.to_vec());
        }
        // Ψ⁻¹(w⊗v) = R⁻⁽¹⁾▷v ⊗ R⁻⁽²⁾▷w; inverse flag: R⁽²⁾▷v ⊗ R⁽¹⁾▷w
        let (r, first_to_v) = if self.inverse { (&self.qt.r, false) } else { (&self.qt.r_inv, true) };
        let rr = n.apply(r, &[]);
        let (rv, rw) = if first_to_v { (rr[0], rr[1]) } else { (rr[1], rr[0]) };
        let vo = n.apply(&v.action, &cat(&[rv], vi));
        let wo = n.apply(&w.action, &cat(&[rw], wi));
        (vo, wo)
    }

    pub fn check_module(&self, v: &HModule) -> Report {
        let mut rep = Report::new("H-module");
        check_left_action(&mut rep, "H-action", self.h(), &v.legs, &v.action);
        rep
    }

    /// Record whether `f: X → Y` commutes with the H-actions.
    pub fn check_equivariant(&self, rep: &mut Report, name: &str, f: &MultiMap, x: &HModule, y: &HModule) -> bool {
        if self.is_trivial() {
            return rep.check(format!("{name} is H-linear"), true, Some("trivial ambient".into()));
        }
        let mut n = Net::new();
        let h = n.input(self.hspace());
        let xi = n.inputs(&x.legs);
        let xo = n.apply(&x.action, &cat(&[h], &xi));
        let fo = n.apply(f, &xo);
        let lhs = n.eval(&fo);
        let mut n = Net::new();
        let h = n.input(self.hspace());
        let xi = n.inputs(&x.legs);
        let fo = n.apply(f, &xi);
        let yo = n.apply(&y.action, &cat(&[h], &fo));
        let rhs = n.eval(&yo);
        rep.equal(format!("{name} is H-linear"), &lhs, &rhs)
    }

    /// Hexagon identities and naturality of the braiding on the given objects.
    pub fn check_braiding(&self, u: &HModule, v: &HModule, w: &HModule, f: Option<(&MultiMap, &HModule)>) -> Report {
        let mut rep = Report::new("braiding");
        // Ψ_{U⊗V,W} computed directly on the tensor object vs. composite
        let uv = self.tensor(u, v);
        let direct = self.braiding(&uv, w);
        let mut n = Net::new();
        let ui = n.inputs(&u.legs);
        let vi = n.inputs(&v.legs);
        let wi = n.inputs(&w.legs);
        let (w1, v1) = self.braid_wires(&mut n, v, w, &vi, &wi);
        let (w2, u1) = self.braid_wires(&mut n, u, w, &ui, &w1);
        let composite = n.eval(&[w2, u1, v1].concat());
        rep.equal("hexagon for a tensor first argument", &direct, &composite);
        let vw = self.tensor(v, w);
        let direct = self.braiding(u, &vw);
        let mut n = Net::new();
        let ui = n.inputs(&u.legs);
        let vi = n.inputs(&v.legs);
        let wi = n.inputs(&w.legs);
        let (v1, u1) = self.braid_wires(&mut n, u, v, &ui, &vi);
        let (w1, u2) = self.braid_wires(&mut n, u, w, &u1, &wi);
        let composite = n.eval(&[v1, w1, u2].concat());
        rep.equal("hexagon for a tensor second argument", &direct, &composite);
        let psi = self.braiding(u, v);
        let inv = self.braiding_inverse(u, v);
        rep.equal("inverse after braiding", &psi.then(&inv), &MultiMap::identity(&cat(&u.legs, &v.legs)));
        rep.equal("braiding after inverse", &inv.then(&psi), &MultiMap::identity(&cat(&v.legs, &u.legs)));
        if let Some((f, target)) = f {
            // f: U → target, Ψ_{target,V}(f⊗id) = (id⊗f)Ψ_{U,V}
            let lhs = f.tensor(&MultiMap::identity(&v.legs)).then(&self.braiding(target, v));
            let rhs = self.braiding(u, v).then(&MultiMap::identity(&v.legs).tensor(f));
            rep.equal("naturality", &lhs, &rhs);
        }
        rep
    }
}

pub(crate) fn cat<T: Clone>(a: &[T], b: &[T]) -> Vec<T> {
    let mut v = a.to_vec();
    v.extend_from_slice(b);
    v
}

/// Left action axioms of an algebra (given by `alg`'s mult/unit) on legs.
pub(crate) fn check_left_action(rep: &mut Report, name: &str, alg: &Bialgebra, legs: &[Space], act: &MultiMap) {
    check_left_action_raw(rep, name, &alg.space, &alg.mult, &alg.unit, legs, act)
}

pub(crate) fn check_left_action_raw(rep: &mut Report, name: &str, a: &Space, mult: &MultiMap, unit: &MultiMap, legs: &[Space], act: &MultiMap) {
    let mut n = Net::new();
    let x = n.input(a);
    let y = n.input(a);
    let vi = n.inputs(legs);
    let xy = n.apply1(mult, &[x, y]);
    let o = n.apply(act, &cat(&[xy], &vi));
    let lhs = n.eval(&o);
    let mut n = Net::new();
    let x = n.input(a);
    let y = n.input(a);
    let vi = n.inputs(legs);
    let o1 = n.apply(act, &cat(&[y], &vi));
    let o = n.apply(act, &cat(&[x], &o1));
    let rhs = n.eval(&o);
    rep.equal(format!("{name} associativity"), &lhs, &rhs);
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let u = n.apply1(unit, &[]);
    let o = n.apply(act, &cat(&[u], &vi));
    rep.equal(format!("{name} unit"), &n.eval(&o), &MultiMap::identity(legs));
}

pub(crate) fn check_right_action_raw(rep: &mut Report, name: &str, a: &Space, mult: &MultiMap, unit: &MultiMap, legs: &[Space], act: &MultiMap) {
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let x = n.input(a);
    let y = n.input(a);
    let xy = n.apply1(mult, &[x, y]);
    let o = n.apply(act, &cat(&vi, &[xy]));
    let lhs = n.eval(&o);
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let x = n.input(a);
    let y = n.input(a);
    let o1 = n.apply(act, &cat(&vi, &[x]));
    let o = n.apply(act, &cat(&o1, &[y]));
    let rhs = n.eval(&o);
    rep.equal(format!("{name} associativity"), &lhs, &rhs);
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let u = n.apply1(unit, &[]);
    let o = n.apply(act, &cat(&vi, &[u]));
    rep.equal(format!("{name} unit"), &n.eval(&o), &MultiMap::identity(legs));
}

pub(crate) fn check_left_coaction_raw(rep: &mut Report, name: &str, comult: &MultiMap, counit: &MultiMap, legs: &[Space], co: &MultiMap) {
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let o = n.apply(co, &vi);
    let d = n.apply(comult, &[o[0]]);
    let lhs = n.eval(&cat(&d, &o[1..]));
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let o = n.apply(co, &vi);
    let o2 = n.apply(co, &o[1..]);
    let rhs = n.eval(&cat(&[o[0]], &o2));
    rep.equal(format!("{name} coassociativity"), &lhs, &rhs);
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let o = n.apply(co, &vi);
    n.apply(counit, &[o[0]]);
    rep.equal(format!("{name} counit"), &n.eval(&o[1..]), &MultiMap::identity(legs));
}

pub(crate) fn check_right_coaction_raw(rep: &mut Report, name: &str, comult: &MultiMap, counit: &MultiMap, legs: &[Space], co: &MultiMap) {
    let k = legs.len();
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let o = n.apply(co, &vi);
    let d = n.apply(comult, &[o[k]]);
    let lhs = n.eval(&cat(&o[..k], &d));
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let o = n.apply(co, &vi);
    let o2 = n.apply(co, &o[..k]);
    let rhs = n.eval(&cat(&o2, &[o[k]]));
    rep.equal(format!("{name} coassociativity"), &lhs, &rhs);
    let mut n = Net::new();
    let vi = n.inputs(legs);
    let o = n.apply(co, &vi);
    n.apply(counit, &[o[k]]);
    rep.equal(format!("{name} counit"), &n.eval(&o[..k]), &MultiMap::identity(legs));
}

/// Bialgebra (optionally Hopf) object in the ambient category, on one leg.
#[derive(Clone, Debug)]
pub struct BraidedBialgebra {
    pub amb: Ambient,
    pub obj: HModule,
    pub mult: MultiMap,
    pub unit: MultiMap,
    pub comult: MultiMap,
    pub counit: MultiMap,
    pub antipode: Option<MultiMap>,
    pub antipode_inv: Option<MultiMap>,
}

impl BraidedBialgebra {
    /// An ordinary bialgebra viewed in the trivial ambient category.
    pub fn from_hopf(b: &Bialgebra) -> BraidedBialgebra {
        BraidedBialgebra::with_trivial_action(b, Ambient::trivial())
    }

    /// An ordinary bialgebra with trivial H-action in the given ambient.
    pub fn with_trivial_action(b: &Bialgebra, amb: Ambient) -> BraidedBialgebra {
        let obj = amb.trivial_module(std::slice::from_ref(&b.space));
        BraidedBialgebra {
            amb,
            obj,
            mult: b.mult.clone(),
            unit: b.unit.clone(),
            comult: b.comult.clone(),
            counit: b.counit.clone(),
            antipode: b.antipode.clone(),
            antipode_inv: b.antipode_inv.clone(),
        }
    }

    pub fn space(&self) -> &Space {
        &self.obj.legs[0]
    }

    pub fn dim(&self) -> usize {
        self.space().dim()
    }

    /// Underlying structure constants, forgetting the ambient.
    pub fn underlying(&self) -> Bialgebra {
        Bialgebra {
            space: self.space().clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult: self.comult.clone(),
            counit: self.counit.clone(),
            antipode: self.antipode.clone(),
            antipode_inv: self.antipode_inv.clone(),
        }
    }

    /// Solve for the antipode (convolution inverse of the identity) and its inverse.
    pub fn into_hopf(mut self) -> Result<BraidedBialgebra, BraidedError> {
        let u = self.underlying().into_hopf().map_err(|e| BraidedError::Check(e.to_string()))?;
        self.antipode = u.antipode;
        self.antipode_inv = u.antipode_inv;
        Ok(self)
    }

    pub fn is_hopf(&self) -> bool {
        self.antipode.is_some()
    }

    pub fn s(&self) -> Result<&MultiMap, BraidedError> {
        self.antipode.as_ref().ok_or_else(|| BraidedError::MissingAntipode(self.space().name().to_string()))
    }

    pub fn s_inv(&self) -> Result<&MultiMap, BraidedError> {
        self.antipode_inv.as_ref().ok_or_else(|| BraidedError::MissingAntipode(self.space().name().to_string()))
    }

    pub fn pair(&self) -> HModule {
        self.amb.tensor(&self.obj, &self.obj)
    }

    pub fn psi(&self) -> MultiMap {
        self.amb.braiding(&self.obj, &self.obj)
    }

    /// Coproduct of the braided tensor square: x⊗y ↦ x₁ ⊗ Ψ(x₂⊗y₁) ⊗ y₂.
    pub fn comult_pair(&self) -> MultiMap {
        let mut n = Net::new();
        let x = n.input(self.space());
        let y = n.input(self.space());
        let dx = n.apply(&self.comult, &[x]);
        let dy = n.apply(&self.comult, &[y]);
        let (y1, x2) = self.amb.braid_wires(&mut n, &self.obj, &self.obj, &[dx[1]], &[dy[0]]);
        n.eval(&[dx[0], y1[0], x2[0], dy[1]])
    }

    /// Product of the braided tensor square: (m⊗m)(id⊗Ψ⊗id).
    pub fn mult_pair(&self) -> MultiMap {
        let mut n = Net::new();
        let x = n.inputs(&[self.space().clone(), self.space().clone(), self.space().clone(), self.space().clone()]);
        let (c, b) = self.amb.braid_wires(&mut n, &self.obj, &self.obj, &[x[1]], &[x[2]]);
        let p = n.apply1(&self.mult, &[x[0], c[0]]);
        let q = n.apply1(&self.mult, &[b[0], x[3]]);
        n.eval(&[p, q])
    }

    /// Same product, coproduct Ψ⁻¹Δ, in the inverse-braided ambient.
    pub fn cop(&self) -> BraidedBialgebra {
        let comult = self.comult.then(&self.amb.braiding_inverse(&self.obj, &self.obj));
        BraidedBialgebra {
            amb: self.amb.inverted(),
            obj: self.obj.clone(),
            mult: self.mult.clone(),
            unit: self.unit.clone(),
            comult,
            counit: self.counit.clone(),
            antipode: self.antipode_inv.clone(),
            antipode_inv: self.antipode.clone(),
        }
    }

    pub fn identity(&self) -> MultiMap {
        MultiMap::identity(std::slice::from_ref(self.space()))
    }

    pub fn element(&self, label: &str) -> MultiMap {
        let i = self.space().index_of(label).unwrap_or_else(|| panic!("no basis element `{label}`"));
        MultiMap::basis_vector(std::slice::from_ref(self.space()), &[i as u32])
    }

    pub fn mul(&self, a: &MultiMap, b: &MultiMap) -> MultiMap {
        a.tensor(b).then(&self.mult)
    }
}

pub fn check_braided_bialgebra(b: &BraidedBialgebra) -> Report {
    let mut rep = Report::new(format!("braided bialgebra {}", b.space().name()));
    let amb = &b.amb;
    rep.absorb("", amb.check_module(&b.obj));
    let one = amb.unit_object();
    let two = b.pair();
    amb.check_equivariant(&mut rep, "multiplication", &b.mult, &two, &b.obj);
    amb.check_equivariant(&mut rep, "unit", &b.unit, &one, &b.obj);
    amb.check_equivariant(&mut rep, "comultiplication", &b.comult, &b.obj, &two);
    amb.check_equivariant(&mut rep, "counit", &b.counit, &b.obj, &one);
    let u = b.underlying();
    rep.absorb("", crate::hopf::check_algebra(&u.algebra()));
    rep.absorb("", crate::hopf::check_coalgebra(&u.coalgebra()));
    let lhs = b.mult.then(&b.comult);
    let rhs = crate::network::then_parallel(&b.comult_pair(), &[&b.mult, &b.mult]);
    rep.equal("comultiplication is multiplicative (braided)", &lhs, &rhs);
    rep.equal("comultiplication preserves unit", &b.unit.then(&b.comult), &b.unit.tensor(&b.unit));
    rep.equal("counit is multiplicative", &b.mult.then(&b.counit), &b.counit.tensor(&b.counit));
    rep.equal("counit of unit", &b.unit.then(&b.counit), &MultiMap::scalar(Scalar::one()));
    if let Some(s) = &b.antipode {
        amb.check_equivariant(&mut rep, "antipode", s, &b.obj, &b.obj);
        let id = b.identity();
        let ue = b.unit.compose(&b.counit).unwrap();
        rep.equal("antipode left", &linalg::convolve(s, &id, &b.comult, &b.mult), &ue);
        rep.equal("antipode right", &linalg::convolve(&id, s, &b.comult, &b.mult), &ue);
        if let Some(si) = &b.antipode_inv {
            rep.equal("antipode inverse", &s.then(si), &id);
        }
    }
    rep
}

/// Precondition (commutative or cocommutative in the ambient) and the
/// bialgebra axiom with the inverse braiding.
pub fn check_commutative_in_inverse_braiding(b: &BraidedBialgebra) -> Report {
    let mut rep = Report::new(format!("{} in the inverse-braided category", b.space().name()));
    let psi = b.psi();
    let comm = psi.then(&b.mult) == b.mult;
    let cocomm = b.comult.then(&psi) == b.comult;
    if !rep.check("commutative or cocommutative", comm || cocomm, Some(format!("commutative: {comm}, cocommutative: {cocomm}"))) {
        return rep;
    }
    let inv = BraidedBialgebra { amb: b.amb.inverted(), ..b.clone() };
    let lhs = b.mult.then(&b.comult);
    let rhs = crate::network::then_parallel(&inv.comult_pair(), &[&b.mult, &b.mult]);
    rep.equal("comultiplication is multiplicative (inverse braiding)", &lhs, &rhs);
    rep
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

/// Kinds of B-structure carried by an object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StructKind {
    LeftModule,
    RightModule,
    LeftComodule,
    RightComodule,
}

impl StructKind {
    fn is_module(self) -> bool {
        matches!(self, StructKind::LeftModule | StructKind::RightModule)
    }
}

/// The trivial B-structure (ε-action or 1-coaction) on legs.
pub fn trivial_structure(b: &BraidedBialgebra, kind: StructKind, legs: &[Space]) -> MultiMap {
    let id = MultiMap::identity(legs);
    match kind {
        StructKind::LeftModule => b.counit.tensor(&id),
        StructKind::RightModule => id.tensor(&b.counit),
        StructKind::LeftComodule => b.unit.tensor(&id),
        StructKind::RightComodule => id.tensor(&b.unit),
    }
}

/// B-structure axioms of `map` on legs.
pub fn check_structure(rep: &mut Report, name: &str, b: &BraidedBialgebra, kind: StructKind, legs: &[Space], map: &MultiMap) {
    match kind {
        StructKind::LeftModule => check_left_action_raw(rep, name, b.space(), &b.mult, &b.unit, legs, map),
        StructKind::RightModule => check_right_action_raw(rep, name, b.space(), &b.mult, &b.unit, legs, map),
        StructKind::LeftComodule => check_left_coaction_raw(rep, name, &b.comult, &b.counit, legs, map),
        StructKind::RightComodule => check_right_coaction_raw(rep, name, &b.comult, &b.counit, legs, map),
    }
}

/// Diagonal B-structure on X⊗Y, built with Δ_B or m_B and the braiding.
pub fn tensor_structure(b: &BraidedBialgebra, kind: StructKind, x: &HModule, xs: &MultiMap, y: &HModule, ys: &MultiMap) -> MultiMap {
    let amb = &b.amb;
    let bo = &b.obj;
    let mut n = Net::new();
    match kind {
        StructKind::LeftModule => {
            let bw = n.input(b.space());
            let xi = n.inputs(&x.legs);
            let yi = n.inputs(&y.legs);
            let d = n.apply(&b.comult, &[bw]);
            let (x1, b2) = amb.braid_wires(&mut n, bo, x, &[d[1]], &xi);
            let xo = n.apply(xs, &cat(&[d[0]], &x1));
            let yo = n.apply(ys, &cat(&b2, &yi));
            n.eval(&cat(&xo, &yo))
        }
        StructKind::RightModule => {
            let xi = n.inputs(&x.legs);
            let yi = n.inputs(&y.legs);
            let bw = n.input(b.space());
            let d = n.apply(&b.comult, &[bw]);
            let (b1, y1) = amb.braid_wires(&mut n, y, bo, &yi, &[d[0]]);
            let xo = n.apply(xs, &cat(&xi, &b1));
            let yo = n.apply(ys, &cat(&y1, &[d[1]]));
            n.eval(&cat(&xo, &yo))
        }
        StructKind::LeftComodule => {
            let xi = n.inputs(&x.legs);
            let yi = n.inputs(&y.legs);
            let xo = n.apply(xs, &xi);
            let yo = n.apply(ys, &yi);
            let (by, x0) = amb.braid_wires(&mut n, x, bo, &xo[1..], &[yo[0]]);
            let m = n.apply1(&b.mult, &[xo[0], by[0]]);
            n.eval(&[vec![m], x0, yo[1..].to_vec()].concat())
        }
        StructKind::RightComodule => {
            let xi = n.inputs(&x.legs);
            let yi = n.inputs(&y.legs);
            let xo = n.apply(xs, &xi);
            let yo = n.apply(ys, &yi);
            let kx = x.legs.len();
            let ky = y.legs.len();
            let (y0, bx) = amb.braid_wires(&mut n, bo, y, &[xo[kx]], &yo[..ky]);
            let m = n.apply1(&b.mult, &[bx[0], yo[ky]]);
            n.eval(&[xo[..kx].to_vec(), y0, vec![m]].concat())
        }
    }
}

/// Record whether f: X → Y intertwines the B-structures xs and ys.
pub fn check_structure_morphism(rep: &mut Report, name: &str, b: &BraidedBialgebra, kind: StructKind, f: &MultiMap, x: &[Space], xs: &MultiMap, y: &[Space], ys: &MultiMap) -> bool {
    let bs = std::slice::from_ref(b.space());
    let (lhs, rhs) = match kind {
        StructKind::LeftModule => {
            (xs.then(f), MultiMap::identity(bs).tensor(f).then(ys))
        }
        StructKind::RightModule => (xs.then(f), f.tensor(&MultiMap::identity(bs)).then(ys)),
        StructKind::LeftComodule => (f.then(ys), xs.then(&MultiMap::identity(bs).tensor(f))),
        StructKind::RightComodule => (f.then(ys), xs.then(&f.tensor(&MultiMap::identity(bs)))),
    };
    let _ = (x, y);
    let what = if kind.is_module() { "module" } else { "comodule" };
    rep.equal(format!("{name} is a {what} map"), &lhs, &rhs)
}

/// Yetter-Drinfeld module (left: B⊗V → V, V → B⊗V; right: V⊗B → V, V → V⊗B).
#[derive(Clone, Debug)]
pub struct YDModule {
    pub b: BraidedBialgebra,
    pub obj: HModule,
    pub action: MultiMap,
    pub coaction: MultiMap,
    pub side: Side,
}

impl YDModule {
    pub fn legs(&self) -> &[Space] {
        &self.obj.legs
    }

    fn kinds(&self) -> (StructKind, StructKind) {
        match self.side {
            Side::Left => (StructKind::LeftModule, StructKind::LeftComodule),
            Side::Right => (StructKind::RightModule, StructKind::RightComodule),
        }
    }

    /// The unit object with trivial structures.
    pub fn unit(b: &BraidedBialgebra, side: Side) -> YDModule {
        let obj = b.amb.unit_object();
        let (a, c) = match side {
            Side::Left => (StructKind::LeftModule, StructKind::LeftComodule),
            Side::Right => (StructKind::RightModule, StructKind::RightComodule),
        };
        YDModule { b: b.clone(), action: trivial_structure(b, a, &[]), coaction: trivial_structure(b, c, &[]), obj, side }
    }
}

pub fn check_yd(v: &YDModule) -> Report {
    let b = &v.b;
    let amb = &b.amb;
    let bo = &b.obj;
    let mut rep = Report::new(format!("{:?} Yetter-Drinfeld module", v.side));
    rep.absorb("", amb.check_module(&v.obj));
    let (ak, ck) = v.kinds();
    check_structure(&mut rep, "B-action", b, ak, v.legs(), &v.action);
    check_structure(&mut rep, "B-coaction", b, ck, v.legs(), &v.coaction);
    let bv = match v.side {
        Side::Left => amb.tensor(bo, &v.obj),
        Side::Right => amb.tensor(&v.obj, bo),
    };
    amb.check_equivariant(&mut rep, "B-action", &v.action, &bv, &v.obj);
    amb.check_equivariant(&mut rep, "B-coaction", &v.coaction, &v.obj, &bv);
    let k = v.legs().len();
    let (lhs, rhs) = match v.side {
        Side::Left => {
            let mut n = Net::new();
            let bw = n.input(b.space());
            let vi = n.inputs(v.legs());
            let d = n.apply(&b.comult, &[bw]);
            let dv = n.apply(&v.coaction, &vi);
            let (c, b2) = amb.braid_wires(&mut n, bo, bo, &[d[1]], &[dv[0]]);
            let m = n.apply1(&b.mult, &[d[0], c[0]]);
            let a = n.apply(&v.action, &cat(&b2, &dv[1..]));
            let lhs = n.eval(&cat(&[m], &a));
            let mut n = Net::new();
            let bw = n.input(b.space());
            let vi = n.inputs(v.legs());
            let d = n.apply(&b.comult, &[bw]);
            let (v1, b2) = amb.braid_wires(&mut n, bo, &v.obj, &[d[1]], &vi);
            let a = n.apply(&v.action, &cat(&[d[0]], &v1));
            let dy = n.apply(&v.coaction, &a);
            let (b2b, y0) = amb.braid_wires(&mut n, &v.obj, bo, &dy[1..], &b2);
            let m = n.apply1(&b.mult, &[dy[0], b2b[0]]);
            (lhs, n.eval(&cat(&[m], &y0)))
        }
        Side::Right => {
            let mut n = Net::new();
            let vi = n.inputs(v.legs());
            let bw = n.input(b.space());
            let dv = n.apply(&v.coaction, &vi);
            let d = n.apply(&b.comult, &[bw]);
            let (b1, v1) = amb.braid_wires(&mut n, bo, bo, &[dv[k]], &[d[0]]);
            let a = n.apply(&v.action, &cat(&dv[..k], &b1));
            let m = n.apply1(&b.mult, &[v1[0], d[1]]);
            let lhs = n.eval(&cat(&a, &[m]));
            let mut n = Net::new();
            let vi = n.inputs(v.legs());
            let bw = n.input(b.space());
            let d = n.apply(&b.comult, &[bw]);
            let (b1, vv) = amb.braid_wires(&mut n, &v.obj, bo, &vi, &[d[0]]);
            let a = n.apply(&v.action, &cat(&vv, &[d[1]]));
            let dy = n.apply(&v.coaction, &a);
            let (y0, b1b) = amb.braid_wires(&mut n, bo, &v.obj, &b1, &dy[..k]);
            let m = n.apply1(&b.mult, &[b1b[0], dy[k]]);
            (lhs, n.eval(&cat(&y0, &[m])))
        }
    };
    rep.equal("Yetter-Drinfeld compatibility", &lhs, &rhs);
    rep
}

/// V⊗W in the category of YD modules (diagonal action and coaction).
pub fn yd_tensor(v: &YDModule, w: &YDModule) -> YDModule {
    assert_eq!(v.side, w.side, "YD modules on different sides");
    let b = &v.b;
    let (ak, ck) = v.kinds();
    YDModule {
        b: b.clone(),
        obj: b.amb.tensor(&v.obj, &w.obj),
        action: tensor_structure(b, ak, &v.obj, &v.action, &w.obj, &w.action),
        coaction: tensor_structure(b, ck, &v.obj, &v.coaction, &w.obj, &w.coaction),
        side: v.side,
    }
}

/// Braiding of left YD modules: (a_W⊗id)(id⊗Ψ_{V,W})(δ_V⊗id).
pub fn yd_braiding(v: &YDModule, w: &YDModule) -> MultiMap {
    assert_eq!(v.side, Side::Left);
    let amb = &v.b.amb;
    let mut n = Net::new();
    let vi = n.inputs(v.legs());
    let wi = n.inputs(w.legs());
    let dv = n.apply(&v.coaction, &vi);
    let (w1, v1) = amb.braid_wires(&mut n, &v.obj, &w.obj, &dv[1..], &wi);
    let a = n.apply(&w.action, &cat(&[dv[0]], &w1));
    n.eval(&cat(&a, &v1))
}

/// Right YD module over B in 𝓑 to left YD module over cop-B in the
/// inverse-braided category: a′ = a Ψ⁻¹ (S⁻¹⊗id), δ′ = Ψ⁻¹ δ.
pub fn translate_right_left(v: &YDModule) -> Result<YDModule, BraidedError> {
    assert_eq!(v.side, Side::Right);
    let b = &v.b;
    let amb = &b.amb;
    let si = b.s_inv()?.clone();
    let k = v.legs().len();
    let mut n = Net::new();
    let bw = n.input(b.space());
    let vi = n.inputs(v.legs());
    let s = n.apply1(&si, &[bw]);
    // B⊗V → V⊗B, the inverse of Ψ_{V,B}
    let (vv, bb) = amb.unbraid_wires(&mut n, &v.obj, &b.obj, &[s], &vi);
    let a = n.apply(&v.action, &cat(&vv, &bb));
    let action = n.eval(&a);
    let mut n = Net::new();
    let vi = n.inputs(v.legs());
    let d = n.apply(&v.coaction, &vi);
    // V⊗B → B⊗V, the inverse of Ψ_{B,V}
    let (bb, vv) = amb.unbraid_wires(&mut n, &b.obj, &v.obj, &d[..k], &[d[k]]);
    let coaction = n.eval(&cat(&bb, &vv));
    Ok(YDModule { b: b.cop(), obj: v.obj.clone(), action, coaction, side: Side::Left })
}

/// Inverse of `translate_right_left`.
pub fn translate_left_right(v: &YDModule) -> Result<YDModule, BraidedError> {
    assert_eq!(v.side, Side::Left);
    let cb = &v.b;
    let b = cb.cop();
    let amb = &b.amb;
    let s = b.s()?.clone();
    let k = v.legs().len();
    let mut n = Net::new();
    let vi = n.inputs(v.legs());
    let bw = n.input(b.space());
    let (bb, vv) = amb.braid_wires(&mut n, &v.obj, &b.obj, &vi, &[bw]);
    let sb = n.apply1(&s, &bb);
    let a = n.apply(&v.action, &cat(&[sb], &vv));
    let action = n.eval(&a);
    let mut n = Net::new();
    let vi = n.inputs(v.legs());
    let d = n.apply(&v.coaction, &vi);
    let (vv, bb) = amb.braid_wires(&mut n, &b.obj, &v.obj, &[d[0]], &d[1..]);
    let coaction = n.eval(&cat(&vv, &bb));
    let _ = k;
    Ok(YDModule { b, obj: v.obj.clone(), action, coaction, side: Side::Right })
}

/// An algebra in the category of B-(co)modules: comodule algebras and module algebras.
#[derive(Clone, Debug)]
pub struct AlgObject {
    pub b: BraidedBialgebra,
    pub obj: HModule,
    pub mult: MultiMap,
    pub unit: MultiMap,
    pub structure: MultiMap,
    pub kind: StructKind,
}

pub type ComoduleAlgebra = AlgObject;
pub type ModuleAlgebra = AlgObject;

impl AlgObject {
    pub fn space(&self) -> &Space {
        &self.obj.legs[0]
    }

    pub fn pair(&self) -> HModule {
        self.b.amb.tensor(&self.obj, &self.obj)
    }
}

/// A coalgebra in the category of B-(co)modules.
#[derive(Clone, Debug)]
pub struct CoalgObject {
    pub b: BraidedBialgebra,
    pub obj: HModule,
    pub comult: MultiMap,
    pub counit: MultiMap,
    pub structure: MultiMap,
    pub kind: StructKind,
}

impl CoalgObject {
    pub fn space(&self) -> &Space {
        &self.obj.legs[0]
    }
}

fn check_alg_object(a: &AlgObject, what: &str) -> Report {
    let b = &a.b;
    let amb = &b.amb;
    let mut rep = Report::new(format!("{what} {}", a.space().name()));
    let sp = a.space().clone();
    rep.absorb("", crate::hopf::check_algebra(&crate::hopf::Algebra { space: sp.clone(), mult: a.mult.clone(), unit: a.unit.clone() }));
    rep.absorb("", amb.check_module(&a.obj));
    let two = a.pair();
    let one = amb.unit_object();
    amb.check_equivariant(&mut rep, "multiplication", &a.mult, &two, &a.obj);
    amb.check_equivariant(&mut rep, "unit", &a.unit, &one, &a.obj);
    let bs = match a.kind {
        StructKind::LeftModule | StructKind::LeftComodule => amb.tensor(&b.obj, &a.obj),
        _ => amb.tensor(&a.obj, &b.obj),
    };
    let (sd, sc) = if a.kind.is_module() { (&bs, &a.obj) } else { (&a.obj, &bs) };
    amb.check_equivariant(&mut rep, "B-structure", &a.structure, sd, sc);
    let legs = std::slice::from_ref(&sp);
    check_structure(&mut rep, "B-structure", b, a.kind, legs, &a.structure);
    let ts = tensor_structure(b, a.kind, &a.obj, &a.structure, &a.obj, &a.structure);
    check_structure_morphism(&mut rep, "multiplication", b, a.kind, &a.mult, &two.legs, &ts, legs, &a.structure);
    check_structure_morphism(&mut rep, "unit", b, a.kind, &a.unit, &[], &trivial_structure(b, a.kind, &[]), legs, &a.structure);
    rep
}

pub fn check_comodule_algebra(a: &AlgObject) -> Report {
    check_alg_object(a, "comodule algebra")
}

pub fn check_module_algebra(a: &AlgObject) -> Report {
    check_alg_object(a, "module algebra")
}

pub fn check_coalg_object(c: &CoalgObject) -> Report {
    let b = &c.b;
    let amb = &b.amb;
    let mut rep = Report::new(format!("coalgebra object {}", c.space().name()));
    let sp = c.space().clone();
    rep.absorb("", crate::hopf::check_coalgebra(&crate::hopf::Coalgebra { space: sp.clone(), comult: c.comult.clone(), counit: c.counit.clone() }));
    rep.absorb("", amb.check_module(&c.obj));
    let two = amb.tensor(&c.obj, &c.obj);
    let one = amb.unit_object();
    amb.check_equivariant(&mut rep, "comultiplication", &c.comult, &c.obj, &two);
    amb.check_equivariant(&mut rep, "counit", &c.counit, &c.obj, &one);
    let legs = std::slice::from_ref(&sp);
    check_structure(&mut rep, "B-structure", b, c.kind, legs, &c.structure);
    let ts = tensor_structure(b, c.kind, &c.obj, &c.structure, &c.obj, &c.structure);
    check_structure_morphism(&mut rep, "comultiplication", b, c.kind, &c.comult, legs, &c.structure, &two.legs, &ts);
    check_structure_morphism(&mut rep, "counit", b, c.kind, &c.counit, legs, &c.structure, &[], &trivial_structure(b, c.kind, &[]));
    rep
}

/// The relative module categories acted on by YD modules.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RelKind {
    /// A-modules in left B-comodules (A a comodule algebra).
    ModComod,
    /// A-modules in right B-modules (A a right module algebra).
    ModRmod,
    /// A-modules in left B-modules (A a left module algebra).
    ModLmod,
    /// C-comodules in left B-modules (C a left module coalgebra).
    ComodLmod,
    /// C-comodules in right B-comodules (C a right comodule coalgebra).
    ComodRcomod,
}

impl RelKind {
    fn b_kind(self) -> StructKind {
        match self {
            RelKind::ModComod => StructKind::LeftComodule,
            RelKind::ModRmod => StructKind::RightModule,
            RelKind::ModLmod | RelKind::ComodLmod => StructKind::LeftModule,
            RelKind::ComodRcomod => StructKind::RightComodule,
        }
    }
}

#[derive(Clone, Debug)]
pub enum Partner {
    Alg(AlgObject),
    Coalg(CoalgObject),
}

/// An object with an A-action (or C-coaction) `x_map` and a B-structure `b_map`.
#[derive(Clone, Debug)]
pub struct RelModule {
    pub kind: RelKind,
    pub partner: Partner,
    pub obj: HModule,
    pub x_map: MultiMap,
    pub b_map: MultiMap,
}

impl RelModule {
    pub fn legs(&self) -> &[Space] {
        &self.obj.legs
    }

    pub fn b(&self) -> &BraidedBialgebra {
        match &self.partner {
            Partner::Alg(a) => &a.b,
            Partner::Coalg(c) => &c.b,
        }
    }
}

pub fn check_rel_module(w: &RelModule) -> Report {
    let b = w.b().clone();
    let amb = &b.amb;
    let mut rep = Report::new(format!("relative module ({:?})", w.kind));
    rep.absorb("", amb.check_module(&w.obj));
    let bk = w.kind.b_kind();
    check_structure(&mut rep, "B-structure", &b, bk, w.legs(), &w.b_map);
    let bw = match bk {
        StructKind::LeftModule | StructKind::LeftComodule => amb.tensor(&b.obj, &w.obj),
        _ => amb.tensor(&w.obj, &b.obj),
    };
    if bk.is_module() {
        amb.check_equivariant(&mut rep, "B-structure", &w.b_map, &bw, &w.obj);
    } else {
        amb.check_equivariant(&mut rep, "B-structure", &w.b_map, &w.obj, &bw);
    }
    match &w.partner {
        Partner::Alg(a) => {
            let ok = a.kind == bk || (w.kind == RelKind::ModComod && a.kind == StructKind::LeftComodule);
            rep.check("partner algebra has the matching B-structure", ok, None);
            check_left_action_raw(&mut rep, "A-action", a.space(), &a.mult, &a.unit, w.legs(), &w.x_map);
            let aw = amb.tensor(&a.obj, &w.obj);
            amb.check_equivariant(&mut rep, "A-action", &w.x_map, &aw, &w.obj);
            let ts = tensor_structure(&b, bk, &a.obj, &a.structure, &w.obj, &w.b_map);
            check_structure_morphism(&mut rep, "A-action", &b, bk, &w.x_map, &aw.legs, &ts, w.legs(), &w.b_map);
        }
        Partner::Coalg(c) => {
            rep.check("partner coalgebra has the matching B-structure", c.kind == bk, None);
            check_left_coaction_raw(&mut rep, "C-coaction", &c.comult, &c.counit, w.legs(), &w.x_map);
            let cw = amb.tensor(&c.obj, &w.obj);
            amb.check_equivariant(&mut rep, "C-coaction", &w.x_map, &w.obj, &cw);
            let ts = tensor_structure(&b, bk, &c.obj, &c.structure, &w.obj, &w.b_map);
            check_structure_morphism(&mut rep, "C-coaction", &b, bk, &w.x_map, w.legs(), &w.b_map, &cw.legs, &ts);
        }
    }
    rep
}

fn require(cond: bool, msg: &str) -> Result<(), BraidedError> {
    if cond {
        Ok(())
    } else {
        Err(BraidedError::Check(msg.to_string()))
    }
}

/// V▷W for V a left YD module and W an A-module in left B-comodules:
/// a = (a_V⊗a_W)(id⊗Ψ_{A,V}⊗id)(δ_A⊗id), diagonal coaction.
pub fn tensor_act_comod(v: &YDModule, w: &RelModule) -> Result<RelModule, BraidedError> {
    require(v.side == Side::Left && w.kind == RelKind::ModComod, "expects a left YD module and an object of A-modules in B-comodules")?;
    let Partner::Alg(a) = &w.partner else { unreachable!() };
    let b = &v.b;
    let amb = &b.amb;
    let mut n = Net::new();
    let x = n.input(a.space());
    let vi = n.inputs(v.legs());
    let wi = n.inputs(w.legs());
    let d = n.apply(&a.structure, &[x]);
    let (v1, a0) = amb.braid_wires(&mut n, &a.obj, &v.obj, &[d[1]], &vi);
    let vo = n.apply(&v.action, &cat(&[d[0]], &v1));
    let wo = n.apply(&w.x_map, &cat(&a0, &wi));
    let x_map = n.eval(&cat(&vo, &wo));
    let b_map = tensor_structure(b, StructKind::LeftComodule, &v.obj, &v.coaction, &w.obj, &w.b_map);
    Ok(RelModule { kind: w.kind, partner: w.partner.clone(), obj: amb.tensor(&v.obj, &w.obj), x_map, b_map })
}

/// V▷W for V a right YD module and W an A-module in right B-modules,
/// A a right module algebra.
pub fn tensor_act_mod_right(v: &YDModule, w: &RelModule) -> Result<RelModule, BraidedError> {
    require(v.side == Side::Right && w.kind == RelKind::ModRmod, "expects a right YD module and an object of A-modules in right B-modules")?;
    let Partner::Alg(a) = &w.partner else { unreachable!() };
    let b = &v.b;
    let amb = &b.amb;
    let k = v.legs().len();
    let mut n = Net::new();
    let x = n.input(a.space());
    let vi = n.inputs(v.legs());
    let wi = n.inputs(w.legs());
    let d = n.apply(&v.coaction, &vi);
    let (v0, xa) = amb.braid_wires(&mut n, &a.obj, &v.obj, &[x], &d[..k]);
    let y = n.apply1(&a.structure, &[xa[0], d[k]]);
    let wo = n.apply(&w.x_map, &cat(&[y], &wi));
    let x_map = n.eval(&cat(&v0, &wo));
    let b_map = tensor_structure(b, StructKind::RightModule, &v.obj, &v.action, &w.obj, &w.b_map);
    Ok(RelModule { kind: w.kind, partner: w.partner.clone(), obj: amb.tensor(&v.obj, &w.obj), x_map, b_map })
}

/// V▷W for V a left YD module over a Hopf algebra B and W an A-module in
/// left B-modules, A a left module algebra:
/// a = (id⊗a_W)(Ψ⁻¹⊗id)(a_A Ψ⁻¹⊗id)(id⊗(S⁻¹⊗id)δ_V⊗id), diagonal B-action.
pub fn tensor_act_mod_left(v: &YDModule, w: &RelModule) -> Result<RelModule, BraidedError> {
    require(v.side == Side::Left && w.kind == RelKind::ModLmod, "expects a left YD module and an object of A-modules in left B-modules")?;
    let Partner::Alg(a) = &w.partner else { unreachable!() };
    let b = &v.b;
    let amb = &b.amb;
    let si = b.s_inv()?.clone();
    let mut n = Net::new();
    let x = n.input(a.space());
    let vi = n.inputs(v.legs());
    let wi = n.inputs(w.legs());
    let d = n.apply(&v.coaction, &vi);
    let s = n.apply1(&si, &[d[0]]);
    // A⊗B → B⊗A by the inverse of Ψ_{B,A}
    let (bb, aa) = amb.unbraid_wires(&mut n, &b.obj, &a.obj, &[x], &[s]);
    let y = n.apply1(&a.structure, &[bb[0], aa[0]]);
    // A⊗V → V⊗A by the inverse of Ψ_{V,A}
    let (v0, ya) = amb.unbraid_wires(&mut n, &v.obj, &a.obj, &[y], &d[1..]);
    let wo = n.apply(&w.x_map, &cat(&ya, &wi));
    let x_map = n.eval(&cat(&v0, &wo));
    let b_map = tensor_structure(b, StructKind::LeftModule, &v.obj, &v.action, &w.obj, &w.b_map);
    Ok(RelModule { kind: w.kind, partner: w.partner.clone(), obj: amb.tensor(&v.obj, &w.obj), x_map, b_map })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoactVariant {
    /// C a left B-module coalgebra, V a left YD module.
    I,
    /// C a right B-comodule coalgebra, V a right YD module.
    II,
}

/// V▷W for W a C-comodule in B-modules (variant I) or in right B-comodules
/// (variant II).
pub fn tensor_coact(v: &YDModule, w: &RelModule, variant: CoactVariant) -> Result<RelModule, BraidedError> {
    let Partner::Coalg(c) = &w.partner else {
        return Err(BraidedError::Check("expects a comodule over a coalgebra object".into()));
    };
    let b = &v.b;
    let amb = &b.amb;
    match variant {
        CoactVariant::I => {
            require(v.side == Side::Left && w.kind == RelKind::ComodLmod, "variant I expects a left YD module and C-comodules in left B-modules")?;
            let mut n = Net::new();
            let vi = n.inputs(v.legs());
            let wi = n.inputs(w.legs());
            let dv = n.apply(&v.coaction, &vi);
            let gw = n.apply(&w.x_map, &wi);
            let (cc, v0) = amb.braid_wires(&mut n, &v.obj, &c.obj, &dv[1..], &[gw[0]]);
            let ca = n.apply1(&c.structure, &[dv[0], cc[0]]);
            let x_map = n.eval(&[vec![ca], v0, gw[1..].to_vec()].concat());
            let b_map = tensor_structure(b, StructKind::LeftModule, &v.obj, &v.action, &w.obj, &w.b_map);
            Ok(RelModule { kind: w.kind, partner: w.partner.clone(), obj: amb.tensor(&v.obj, &w.obj), x_map, b_map })
        }
        CoactVariant::II => {
            require(v.side == Side::Right && w.kind == RelKind::ComodRcomod, "variant II expects a right YD module and C-comodules in right B-comodules")?;
            let mut n = Net::new();
            let vi = n.inputs(v.legs());
            let wi = n.inputs(w.legs());
            let gw = n.apply(&w.x_map, &wi);
            let dc = n.apply(&c.structure, &[gw[0]]);
            let (cc, vv) = amb.braid_wires(&mut n, &v.obj, &c.obj, &vi, &[dc[0]]);
            let va = n.apply(&v.action, &cat(&vv, &[dc[1]]));
            let x_map = n.eval(&[cc, va, gw[1..].to_vec()].concat());
            let b_map = tensor_structure(b, StructKind::RightComodule, &v.obj, &v.coaction, &w.obj, &w.b_map);
            Ok(RelModule { kind: w.kind, partner: w.partner.clone(), obj: amb.tensor(&v.obj, &w.obj), x_map, b_map })
        }
    }
}

/// Dispatch to the tensor action matching `w`'s kind.
pub fn tensor_act(v: &YDModule, w: &RelModule) -> Result<RelModule, BraidedError> {
    match w.kind {
        RelKind::ModComod => tensor_act_comod(v, w),
        RelKind::ModRmod => tensor_act_mod_right(v, w),
        RelKind::ModLmod => tensor_act_mod_left(v, w),
        RelKind::ComodLmod => tensor_coact(v, w, CoactVariant::I),
        RelKind::ComodRcomod => tensor_coact(v, w, CoactVariant::II),
    }
}

/// Categorical-module laws for (V1, V2, W): (V1⊗V2)▷W = V1▷(V2▷W) and
/// 1▷W = W, as literal equalities of structure maps.
pub fn check_categorical_module(v1: &YDModule, v2: &YDModule, w: &RelModule) -> Report {
    let mut rep = Report::new(format!("categorical module laws ({:?})", w.kind));
    match (tensor_act(&yd_tensor(v1, v2), w), tensor_act(v2, w).and_then(|x| tensor_act(v1, &x))) {
        (Ok(l), Ok(r)) => {
            rep.equal("associativity of the action: A-structure", &l.x_map, &r.x_map);
            rep.equal("associativity of the action: B-structure", &l.b_map, &r.b_map);
        }
        (l, r) => {
            rep.check("associativity of the action", false, Some(format!("{:?} / {:?}", l.err(), r.err())));
        }
    }
    match tensor_act(&YDModule::unit(&v1.b, v1.side), w) {
        Ok(u) => {
            rep.equal("unit object acts trivially: A-structure", &u.x_map, &w.x_map);
            rep.equal("unit object acts trivially: B-structure", &u.b_map, &w.b_map);
        }
        Err(e) => {
            rep.check("unit object acts trivially", false, Some(e.to_string()));
        }
    }
    rep
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::Bialgebra;

    fn cyclic(n: u32) -> Bialgebra {
        let sp = Space::new("G", (0..n).map(|i| format!("g{i}")).collect());
        let s = [sp.clone()];
        let two = [sp.clone(), sp.clone()];
        let mult = MultiMap::from_fn(&two, &s, |d| vec![(vec![(d[0] + d[1]) % n], Scalar::one())]);
        let unit = MultiMap::basis_vector(&s, &[0]);
        let comult = MultiMap::from_fn(&s, &two, |d| vec![(vec![d[0], d[0]], Scalar::one())]);
        let counit = MultiMap::from_fn(&s, &[], |_| vec![(vec![], Scalar::one())]);
        Bialgebra::new(sp, mult, unit, comult, counit).into_hopf().unwrap()
    }

    #[test]
    fn trivial_ambient_braiding_is_flip() {
        let amb = Ambient::trivial();
        let v = amb.trivial_module(&[Space::numbered("V", "v", 2)]);
        let w = amb.trivial_module(&[Space::numbered("W", "w", 3)]);
        let psi = amb.braiding(&v, &w);
        assert_eq!(psi, MultiMap::flip(&v.legs[0], &w.legs[0]));
        assert!(amb.check_braiding(&v, &w, &v, None).passed());
    }

    #[test]
    fn regular_kg_is_braided_bialgebra_and_yd() {
        let b = BraidedBialgebra::from_hopf(&cyclic(3));
        assert!(check_braided_bialgebra(&b).passed());
        // kG with trivial action and coaction g ↦ g⊗g is YD (G abelian)
        let sp = b.space().clone();
        let obj = b.amb.trivial_module(&[sp.clone()]);
        let v = YDModule {
            b: b.clone(),
            obj,
            action: b.counit.tensor(&b.identity()),
            coaction: b.comult.clone(),
            side: Side::Left,
        };
        assert!(check_yd(&v).passed(), "{}", check_yd(&v));
        let vv = yd_tensor(&v, &v);
        assert!(check_yd(&vv).passed());
    }
}
