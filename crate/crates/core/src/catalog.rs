//! Concrete examples: finite groups, group algebras and their duals, Sweedler
//! and Taft algebras, root-of-unity R-matrices on cyclic groups, braided
//! lines with their dual pairings, crossed modules and adjoint structures.

use crate::braided::{self, AlgObject, Ambient, BraidedBialgebra, CoalgObject, HModule, Partner, RelKind, RelModule, Side, StructKind, YDModule};
use crate::double::{self, DoubleAlgebra, DoubleError, Pairing};
use crate::cocycle::{Cocycle2, Cycle2};
use crate::hopf::{self, Bialgebra, DualQuasiTriangular, QuasiTriangular};
use crate::network::Net;
use crate::scalar::{q_binomial, q_factorial, Scalar};
use crate::tensor::{MultiMap, Space};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum CatalogError {
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("invalid parameter: {0}")]
    Parameter(String),
    #[error("constructed structure fails its checks: {0}")]
    Check(String),
    #[error("unknown catalog entry `{0}`")]
    Unknown(String),
    #[error(transparent)]
    Double(#[from] DoubleError),
}

/// A finite group by its multiplication table.
#[derive(Clone, Debug, PartialEq)]
pub struct Group {
    pub name: String,
    pub elems: Vec<String>,
    pub table: Vec<Vec<usize>>,
}

impl Group {
    pub fn from_table(name: &str, elems: Vec<String>, table: Vec<Vec<usize>>) -> Result<Group, CatalogError> {
        let n = elems.len();
        if n == 0 || table.len() != n || table.iter().any(|r| r.len() != n || r.iter().any(|&x| x >= n)) {
            return Err(CatalogError::NotAGroup("table is not square over the element set".into()));
        }
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if table[table[a][b]][c] != table[a][table[b][c]] {
                        return Err(CatalogError::NotAGroup(format!("({0}{1}){2} != {0}({1}{2})", elems[a], elems[b], elems[c])));
                    }
                }
            }
        }
        let e = (0..n).find(|&e| (0..n).all(|a| table[e][a] == a && table[a][e] == a)).ok_or_else(|| CatalogError::NotAGroup("no identity".into()))?;
        for a in 0..n {
            if !(0..n).any(|b| table[a][b] == e) {
                return Err(CatalogError::NotAGroup(format!("{} has no inverse", elems[a])));
            }
        }
        Ok(Group { name: name.to_string(), elems, table })
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn identity(&self) -> usize {
        (0..self.order()).find(|&e| (0..self.order()).all(|a| self.table[e][a] == a)).unwrap()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inv(&self, a: usize) -> usize {
        let e = self.identity();
        (0..self.order()).find(|&b| self.table[a][b] == e).unwrap()
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order()).all(|a| (0..self.order()).all(|b| self.table[a][b] == self.table[b][a]))
    }

    /// Z/n with elements `1, g, g2, …`.
    pub fn cyclic(n: usize) -> Group {
        let elems = (0..n).map(|i| power_label("g", i)).collect();
        let table = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        Group { name: format!("Z{n}"), elems, table }
    }

    /// S3 as a^i b^j with a = (0 1 2), b = (0 1).
    pub fn s3() -> Group {
        let a = [1usize, 2, 0];
        let b = [1usize, 0, 2];
        let id = [0usize, 1, 2];
        let comp = |p: &[usize; 3], q: &[usize; 3]| [p[q[0]], p[q[1]], p[q[2]]];
        let mut perms = Vec::new();
        let mut names = Vec::new();
        for j in 0..2 {
            for i in 0..3 {
                let mut p = id;
                for _ in 0..i {
                    p = comp(&p, &a);
                }
                if j == 1 {
                    p = comp(&p, &b);
                }
                perms.push(p);
                let mut s = power_label("a", i);
                if j == 1 {
                    s = if i == 0 { "b".into() } else { format!("{s}b") };
                }
                names.push(s);
            }
        }
        let idx = |p: [usize; 3]| perms.iter().position(|q| *q == p).unwrap();
        let table = (0..6).map(|x| (0..6).map(|y| idx(comp(&perms[x], &perms[y]))).collect()).collect();
        Group { name: "S3".into(), elems: names, table }
    }

    pub fn product(a: &Group, b: &Group) -> Group {
        let (n, m) = (a.order(), b.order());
        let mut elems = Vec::new();
        for x in &a.elems {
            for y in &b.elems {
                elems.push(format!("({x},{y})"));
            }
        }
        let table = (0..n * m).map(|p| (0..n * m).map(|q| a.table[p / m][q / m] * m + b.table[p % m][q % m]).collect()).collect();
        Group { name: format!("{}x{}", a.name, b.name), elems, table }
    }

    pub fn klein() -> Group {
        Group::product(&Group::cyclic(2), &Group::cyclic(2))
    }
}

fn power_label(x: &str, i: usize) -> String {
    match i {
        0 => "1".into(),
        1 => x.into(),
        _ => format!("{x}{i}"),
    }
}

fn one_leg(s: &Space) -> [Space; 1] {
    [s.clone()]
}

fn two_legs(s: &Space) -> [Space; 2] {
    [s.clone(), s.clone()]
}

/// kG with group-like basis.
pub fn group_algebra(g: &Group) -> Bialgebra {
    let sp = Space::new(&format!("k{}", g.name), g.elems.clone());
    let one = one_leg(&sp);
    let two = two_legs(&sp);
    let mult = MultiMap::from_fn(&two, &one, |d| vec![(vec![g.mul(d[0] as usize, d[1] as usize) as u32], Scalar::one())]);
    let unit = MultiMap::basis_vector(&one, &[g.identity() as u32]);
    let comult = MultiMap::from_fn(&one, &two, |d| vec![(vec![d[0], d[0]], Scalar::one())]);
    let counit = MultiMap::from_fn(&one, &[], |_| vec![(vec![], Scalar::one())]);
    let s = MultiMap::from_fn(&one, &one, |d| vec![(vec![g.inv(d[0] as usize) as u32], Scalar::one())]);
    Bialgebra { space: sp, mult, unit, comult, counit, antipode: Some(s.clone()), antipode_inv: Some(s) }
}

/// k[G], functions on G, with δ-basis labelled `d<g>`.
pub fn functions_on_group(g: &Group) -> Bialgebra {
    let sp = Space::new(&format!("k[{}]", g.name), g.elems.iter().map(|e| format!("d{e}")).collect());
    let n = g.order();
    let one = one_leg(&sp);
    let two = two_legs(&sp);
    let mult = MultiMap::from_fn(&two, &one, |d| if d[0] == d[1] { vec![(vec![d[0]], Scalar::one())] } else { vec![] });
    let unit = MultiMap::vector(&one, (0..n).map(|i| (vec![i as u32], Scalar::one())).collect());
    let comult = MultiMap::from_fn(&one, &two, |d| {
        let mut out = Vec::new();
        for a in 0..n {
            let b = g.mul(g.inv(a), d[0] as usize);
            out.push((vec![a as u32, b as u32], Scalar::one()));
        }
        out
    });
    let e = g.identity() as u32;
    let counit = MultiMap::from_fn(&one, &[], |d| if d[0] == e { vec![(vec![], Scalar::one())] } else { vec![] });
    let s = MultiMap::from_fn(&one, &one, |d| vec![(vec![g.inv(d[0] as usize) as u32], Scalar::one())]);
    Bialgebra { space: sp, mult, unit, comult, counit, antipode: Some(s.clone()), antipode_inv: Some(s) }
}

fn mono_label(j: usize, i: usize, x: &str, g: &str) -> String {
    let xs = match j {
        0 => String::new(),
        1 => x.to_string(),
        _ => format!("{x}{j}"),
    };
    let gs = match i {
        0 => String::new(),
        1 => g.to_string(),
        _ => format!("{g}{i}"),
    };
    let s = format!("{xs}{gs}");
    if s.is_empty() {
        "1".into()
    } else {
        s
    }
}

/// Taft-type algebra on x^j g^i (j, i < n) with gx = q·xg, gⁿ = 1, xⁿ = 0,
/// Δx = x⊗1 + g⊗x; q must be a primitive n-th root of unity.
fn taft_with(n: usize, q: &Scalar, name: &str, x: &str, g: &str) -> Bialgebra {
    let labels = (0..n).flat_map(|j| (0..n).map(move |i| (j, i))).map(|(j, i)| mono_label(j, i, x, g)).collect();
    let sp = Space::new(name, labels);
    let one = one_leg(&sp);
    let two = two_legs(&sp);
    let idx = |j: usize, i: usize| (j * n + i % n) as u32;
    let qp = |e: usize| q.pow(e as i64).unwrap();
    let mult = MultiMap::from_fn(&two, &one, |d| {
        let (j, a) = (d[0] as usize / n, d[0] as usize % n);
        let (l, b) = (d[1] as usize / n, d[1] as usize % n);
        if j + l >= n {
            vec![]
        } else {
            vec![(vec![idx(j + l, a + b)], qp(a * l))]
        }
    });
    let unit = MultiMap::basis_vector(&one, &[0]);
    let comult = MultiMap::from_fn(&one, &two, |d| {
        let (j, a) = (d[0] as usize / n, d[0] as usize % n);
        (0..=j).map(|i| (vec![idx(i, j - i + a), idx(j - i, a)], q_binomial(q, j as u32, i as u32))).collect()
    });
    let counit = MultiMap::from_fn(&one, &[], |d| if (d[0] as usize) < n { vec![(vec![], Scalar::one())] } else { vec![] });
    Bialgebra::new(sp, mult, unit, comult, counit).into_hopf().expect("Taft algebras are Hopf")
}

/// Sweedler's 4-dimensional Hopf algebra: g² = 1, x² = 0, gx = −xg, Δx = x⊗1 + g⊗x.
pub fn sweedler() -> Bialgebra {
    taft_with(2, &Scalar::from_int(-1), "Sweedler", "x", "g")
}

/// Taft algebra of dimension n² over Q(ζ_n) with gx = ζ xg.
pub fn taft(n: usize) -> Result<Bialgebra, CatalogError> {
    if n < 2 {
        return Err(CatalogError::Parameter("Taft algebra needs n >= 2".into()));
    }
    Ok(taft_with(n, &Scalar::zeta(n as u32), &format!("Taft{n}"), "x", "g"))
}

/// kZ/n with K-basis `1, K, K2, …`.
pub fn cyclic_hopf(n: usize) -> Bialgebra {
    let mut g = Group::cyclic(n);
    g.elems = (0..n).map(|i| power_label("K", i)).collect();
    g.name = format!("Z{n}");
    group_algebra(&g)
}

/// R = (1/n) Σ_{a,b} ζ^{-kab} K^a⊗K^b on kZ/n, for k a unit mod n. On
/// weight vectors (K▷v = ζ^α v) the braiding is ζ^{αβ/k} times the flip.
pub fn cyclic_qt(n: usize, k: i64) -> Result<QuasiTriangular, CatalogError> {
    if n == 0 || num_integer::gcd(k.rem_euclid(n as i64), n as i64) != 1 && n > 1 {
        return Err(CatalogError::Parameter(format!("k = {k} is not a unit modulo {n}")));
    }
    let h = cyclic_hopf(n);
    if n == 1 {
        let r = MultiMap::basis_vector(&two_legs(&h.space), &[0, 0]);
        return QuasiTriangular::new(h, r).ok_or_else(|| CatalogError::Check("R not invertible".into()));
    }
    let inv_n = Scalar::from_ratio(1, n as i64);
    let mut coords = Vec::new();
    for a in 0..n {
        for b in 0..n {
            coords.push((vec![a as u32, b as u32], &inv_n * &Scalar::zeta_pow(n as u32, -k * (a * b) as i64)));
        }
    }
    let r = MultiMap::vector(&two_legs(&h.space), coords);
    let qt = QuasiTriangular::new(h, r).ok_or_else(|| CatalogError::Check("R not invertible".into()))?;
    let rep = hopf::check_quasitriangular(&qt);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(qt)
}

/// Inverse of k modulo n.
fn inv_mod(k: i64, n: i64) -> i64 {
    (1..n).find(|x| (k * x).rem_euclid(n) == 1).unwrap_or(1)
}

/// Module over kZ/n on `dim` weight vectors, basis i of weight w·i.
fn weight_module(h: &Bialgebra, n: usize, sp: &Space, w: i64) -> HModule {
    let legs = vec![sp.clone()];
    let action = MultiMap::from_fn(&[h.space.clone(), sp.clone()], &legs, |d| {
        vec![(vec![d[1]], Scalar::zeta_pow(n as u32, w * d[0] as i64 * d[1] as i64))]
    });
    HModule { legs, action }
}

/// Parameters of a braided line over (kZ/n, R_k): generator weight `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LineParams {
    pub n: usize,
    pub k: i64,
    pub w: i64,
}

impl LineParams {
    /// Self-braiding scalar exponent of the generator: Ψ(x⊗x) = ζ^e x⊗x.
    pub fn q_exponent(&self) -> i64 {
        let n = self.n as i64;
        (self.w * self.w * inv_mod(self.k.rem_euclid(n), n)).rem_euclid(n)
    }

    /// Nilpotency order: the multiplicative order of q.
    pub fn order(&self) -> usize {
        let e = self.q_exponent() as usize;
        (1..=self.n).find(|&m| (e * m) % self.n == 0).unwrap()
    }
}

fn line_over(amb: &Ambient, p: LineParams, name: &str, x: &str, weight_sign: i64) -> Result<BraidedBialgebra, CatalogError> {
    let n = p.n;
    let q = Scalar::zeta_pow(n as u32, p.q_exponent());
    let m = p.order();
    if m < 2 {
        return Err(CatalogError::Parameter("the generator must braid with a nontrivial root of unity".into()));
    }
    let sp = Space::new(name, (0..m).map(|i| power_label(x, i)).collect());
    let one = one_leg(&sp);
    let two = two_legs(&sp);
    let mult = MultiMap::from_fn(&two, &one, |d| {
        let s = (d[0] + d[1]) as usize;
        if s < m {
            vec![(vec![s as u32], Scalar::one())]
        } else {
            vec![]
        }
    });
    let unit = MultiMap::basis_vector(&one, &[0]);
    let comult = MultiMap::from_fn(&one, &two, |d| (0..=d[0]).map(|i| (vec![i, d[0] - i], q_binomial(&q, d[0], i))).collect());
    let counit = MultiMap::from_fn(&one, &[], |d| if d[0] == 0 { vec![(vec![], Scalar::one())] } else { vec![] });
    let obj = weight_module(amb.h(), n, &sp, weight_sign * p.w);
    let b = BraidedBialgebra { amb: amb.clone(), obj, mult, unit, comult, counit, antipode: None, antipode_inv: None };
    let b = b.into_hopf().map_err(|e| CatalogError::Check(e.to_string()))?;
    let rep = braided::check_braided_bialgebra(&b);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(b)
}

/// k[x]/(xⁿ) with x primitive, over (kZ/n, R with k = 1), x of weight 1.
pub fn braided_line(n: usize) -> Result<BraidedBialgebra, CatalogError> {
    let p = LineParams { n, k: 1, w: 1 };
    let amb = Ambient::new(cyclic_qt(n, 1)?);
    line_over(&amb, p, &format!("Line{n}"), "x", 1)
}

/// The braided line B = k[x] of weight w and its dual line C = k[f] of
/// weight −w, paired by ev(fᵃ, xᵇ) = δ_ab [a]_q! λᵃ.
pub fn braided_line_pairing_with(p: LineParams, lambda: &Scalar, xname: &str, fname: &str) -> Result<Pairing, CatalogError> {
    let amb = Ambient::new(cyclic_qt(p.n, p.k)?);
    let b = line_over(&amb, p, &format!("B({xname})"), xname, 1)?;
    let c = line_over(&amb, p, &format!("C({fname})"), fname, -1)?;
    let q = Scalar::zeta_pow(p.n as u32, p.q_exponent());
    let ev = MultiMap::from_fn(&[c.space().clone(), b.space().clone()], &[], |d| {
        if d[0] == d[1] {
            vec![(vec![], &q_factorial(&q, d[0]) * &lambda.pow(d[0] as i64).unwrap())]
        } else {
            vec![]
        }
    });
    let pr = Pairing::new(c, b, ev);
    let rep = double::check_pairing(&pr);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(pr)
}

/// Braided line pairing with k = 1, weight 1 and λ = 1.
pub fn braided_line_pairing(n: usize) -> Result<Pairing, CatalogError> {
    braided_line_pairing_with(LineParams { n, k: 1, w: 1 }, &Scalar::one(), "x", "f")
}

/// The sl2 pairing at an odd root of unity: e of weight 2, f of weight −2,
/// R with k = 2, ev(f, e) = 1/(ζ − ζ⁻¹).
pub fn sl2_pairing(n: usize) -> Result<Pairing, CatalogError> {
    if n < 3 || n % 2 == 0 {
        return Err(CatalogError::Parameter(format!("small quantum sl2 needs an odd n >= 3 (n = {n}); at n = 2, ζ − ζ⁻¹ = 0")));
    }
    let z = Scalar::zeta(n as u32);
    let lambda = (&z - &z.inv().unwrap()).inv().ok_or_else(|| CatalogError::Parameter("ζ − ζ⁻¹ = 0".into()))?;
    braided_line_pairing_with(LineParams { n, k: 2, w: 2 }, &lambda, "e", "f")
}

pub fn small_quantum_sl2(n: usize) -> Result<DoubleAlgebra, CatalogError> {
    let p = sl2_pairing(n)?;
    let d = double::drinfeld_double(&p)?;
    let rep = double::check_double(&d);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(d)
}

// ---------------------------------------------------------------------------
// crossed modules and adjoint structures

/// Left-left Yetter-Drinfeld module over kG: basis vector i has degree
/// `grading[i]` and g▷e_i = `action(g, i)`. Requires |g▷v| = g|v|g⁻¹.
pub fn crossed_module_over_group<F>(g: &Group, name: &str, labels: Vec<String>, grading: &[usize], mut action: F) -> Result<YDModule, CatalogError>
where
    F: FnMut(usize, usize) -> Vec<(usize, Scalar)>,
{
    let kg = group_algebra(g);
    let b = BraidedBialgebra::from_hopf(&kg);
    let sp = Space::new(name, labels);
    let legs = vec![sp.clone()];
    let act = MultiMap::from_fn(&[kg.space.clone(), sp.clone()], &legs, |d| action(d[0] as usize, d[1] as usize).into_iter().map(|(j, s)| (vec![j as u32], s)).collect());
    for x in 0..g.order() {
        for i in 0..sp.dim() {
            for (j, _) in act.column(&[x as u32, i as u32]) {
                let want = g.mul(g.mul(x, grading[i]), g.inv(x));
                if grading[j[0] as usize] != want {
                    return Err(CatalogError::Check(format!("{}▷{} has degree {} but should have degree {}", g.elems[x], sp.label(i), g.elems[grading[j[0] as usize]], g.elems[want])));
                }
            }
        }
    }
    let coaction = MultiMap::from_fn(&legs, &[kg.space.clone(), sp.clone()], |d| vec![(vec![grading[d[0] as usize] as u32, d[0]], Scalar::one())]);
    let obj = b.amb.trivial_module(&legs);
    let v = YDModule { b, obj, action: act, coaction, side: Side::Left };
    let rep = braided::check_yd(&v);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(v)
}

/// kG with conjugation action and degree |h| = h.
pub fn adjoint_crossed_module(g: &Group) -> YDModule {
    crossed_module_over_group(g, &format!("ad k{}", g.name), g.elems.clone(), &(0..g.order()).collect::<Vec<_>>(), |x, h| vec![(g.mul(g.mul(x, h), g.inv(x)), Scalar::one())])
        .expect("the adjoint crossed module is Yetter-Drinfeld")
}

/// A one-dimensional crossed module of degree `deg` (central) with a character.
pub fn one_dim_crossed_module(g: &Group, deg: usize, chi: &[Scalar]) -> Result<YDModule, CatalogError> {
    crossed_module_over_group(g, &format!("V[{}]", g.elems[deg]), vec!["v".into()], &[deg], |x, _| vec![(0, chi[x].clone())])
}

/// B with its regular left coaction Δ, as a left B-comodule algebra.
pub fn regular_comodule_algebra(b: &BraidedBialgebra) -> AlgObject {
    AlgObject { b: b.clone(), obj: b.obj.clone(), mult: b.mult.clone(), unit: b.unit.clone(), structure: b.comult.clone(), kind: StructKind::LeftComodule }
}

/// B with the trivial left coaction 1⊗b.
pub fn trivial_comodule_algebra(b: &BraidedBialgebra) -> AlgObject {
    let structure = braided::trivial_structure(b, StructKind::LeftComodule, std::slice::from_ref(b.space()));
    AlgObject { b: b.clone(), obj: b.obj.clone(), mult: b.mult.clone(), unit: b.unit.clone(), structure, kind: StructKind::LeftComodule }
}

/// B with the left regular action, as a left B-module algebra is not
/// available in general; this is B as a left module coalgebra under m.
pub fn regular_module_coalgebra(b: &BraidedBialgebra) -> CoalgObject {
    CoalgObject { b: b.clone(), obj: b.obj.clone(), comult: b.comult.clone(), counit: b.counit.clone(), structure: b.mult.clone(), kind: StructKind::LeftModule }
}

/// Right adjoint action h◁g = S(g₁)hg₂, braided: m(S⊗m)(Ψ⊗id)(id⊗Δ).
pub fn right_adjoint_action(b: &BraidedBialgebra) -> Result<AlgObject, CatalogError> {
    let s = b.s().map_err(|e| CatalogError::Check(e.to_string()))?.clone();
    let mut n = Net::new();
    let h = n.input(b.space());
    let g = n.input(b.space());
    let d = n.apply(&b.comult, &[g]);
    let (gw, hw) = b.amb.braid_wires(&mut n, &b.obj, &b.obj, &[h], &[d[0]]);
    let sg = n.apply1(&s, &gw);
    let t = n.apply1(&b.mult, &[hw[0], d[1]]);
    let o = n.apply1(&b.mult, &[sg, t]);
    let structure = n.eval(&[o]);
    Ok(AlgObject { b: b.clone(), obj: b.obj.clone(), mult: b.mult.clone(), unit: b.unit.clone(), structure, kind: StructKind::RightModule })
}

/// Left adjoint action b▷a = b₁ a S(b₂), braided: b₂ passes a.
pub fn left_adjoint_action(b: &BraidedBialgebra) -> Result<AlgObject, CatalogError> {
    let s = b.s().map_err(|e| CatalogError::Check(e.to_string()))?.clone();
    let mut n = Net::new();
    let x = n.input(b.space());
    let a = n.input(b.space());
    let d = n.apply(&b.comult, &[x]);
    let (aw, bw) = b.amb.braid_wires(&mut n, &b.obj, &b.obj, &[d[1]], &[a]);
    let sb = n.apply1(&s, &bw);
    let t = n.apply1(&b.mult, &[d[0], aw[0]]);
    let o = n.apply1(&b.mult, &[t, sb]);
    let structure = n.eval(&[o]);
    Ok(AlgObject { b: b.clone(), obj: b.obj.clone(), mult: b.mult.clone(), unit: b.unit.clone(), structure, kind: StructKind::LeftModule })
}

/// Left adjoint coaction δ(h) = h₁S(h₃)⊗h₂, braided as (m⊗id)(id⊗Ψ(id⊗S)Δ)Δ.
pub fn left_adjoint_coaction_map(b: &BraidedBialgebra) -> Result<MultiMap, CatalogError> {
    let s = b.s().map_err(|e| CatalogError::Check(e.to_string()))?.clone();
    let mut n = Net::new();
    let h = n.input(b.space());
    let d = n.apply(&b.comult, &[h]);
    let d2 = n.apply(&b.comult, &[d[1]]);
    let s3 = n.apply1(&s, &[d2[1]]);
    let (sw, hw) = b.amb.braid_wires(&mut n, &b.obj, &b.obj, &[d2[0]], &[s3]);
    let m = n.apply1(&b.mult, &[d[0], sw[0]]);
    Ok(n.eval(&[m, hw[0]]))
}

/// H with the left adjoint coaction, as a left comodule coalgebra.
pub fn adjoint_coaction_coalgebra(b: &BraidedBialgebra) -> Result<CoalgObject, CatalogError> {
    let structure = left_adjoint_coaction_map(b)?;
    Ok(CoalgObject { b: b.clone(), obj: b.obj.clone(), comult: b.comult.clone(), counit: b.counit.clone(), structure, kind: StructKind::LeftComodule })
}

/// A commutative H with the left adjoint coaction, as a left comodule algebra.
pub fn adjoint_coaction_algebra(b: &BraidedBialgebra) -> Result<AlgObject, CatalogError> {
    let structure = left_adjoint_coaction_map(b)?;
    Ok(AlgObject { b: b.clone(), obj: b.obj.clone(), mult: b.mult.clone(), unit: b.unit.clone(), structure, kind: StructKind::LeftComodule })
}

/// Right adjoint coaction δ(h) = h₂ ⊗ S(h₁)h₃ of an ordinary Hopf algebra,
/// making it a right comodule coalgebra.
pub fn right_adjoint_coaction_coalgebra(h: &Bialgebra) -> CoalgObject {
    let b = BraidedBialgebra::from_hopf(h);
    let mut n = Net::new();
    let x = n.input(&h.space);
    let d = n.apply(&h.comult, &[x]);
    let d2 = n.apply(&h.comult, &[d[1]]);
    let s1 = n.apply1(h.s(), &[d[0]]);
    let m = n.apply1(&h.mult, &[s1, d2[1]]);
    let structure = n.eval(&[d2[0], m]);
    CoalgObject { b: b.clone(), obj: b.obj.clone(), comult: h.comult.clone(), counit: h.counit.clone(), structure, kind: StructKind::RightComodule }
}

/// C with the trivial right coaction c ↦ c⊗1.
pub fn trivial_right_comodule_coalgebra(b: &BraidedBialgebra, c: &BraidedBialgebra) -> CoalgObject {
    let structure = braided::trivial_structure(b, StructKind::RightComodule, std::slice::from_ref(c.space()));
    CoalgObject { b: b.clone(), obj: c.obj.clone(), comult: c.comult.clone(), counit: c.counit.clone(), structure, kind: StructKind::RightComodule }
}

/// Right-right Yetter-Drinfeld module over kG: basis vector i has degree
/// `grading[i]` and e_i◁g = `action(i, g)`. Requires |v◁g| = g⁻¹|v|g.
pub fn right_crossed_module_over_group<F>(g: &Group, name: &str, labels: Vec<String>, grading: &[usize], mut action: F) -> Result<YDModule, CatalogError>
where
    F: FnMut(usize, usize) -> Vec<(usize, Scalar)>,
{
    let kg = group_algebra(g);
    let b = BraidedBialgebra::from_hopf(&kg);
    let sp = Space::new(name, labels);
    let legs = vec![sp.clone()];
    let act = MultiMap::from_fn(&[sp.clone(), kg.space.clone()], &legs, |d| action(d[0] as usize, d[1] as usize).into_iter().map(|(j, s)| (vec![j as u32], s)).collect());
    for x in 0..g.order() {
        for i in 0..sp.dim() {
            for (j, _) in act.column(&[i as u32, x as u32]) {
                let want = g.mul(g.mul(g.inv(x), grading[i]), x);
                if grading[j[0] as usize] != want {
                    return Err(CatalogError::Check(format!("{}◁{} has degree {} but should have degree {}", sp.label(i), g.elems[x], g.elems[grading[j[0] as usize]], g.elems[want])));
                }
            }
        }
    }
    let coaction = MultiMap::from_fn(&legs, &[sp.clone(), kg.space.clone()], |d| vec![(vec![d[0], grading[d[0] as usize] as u32], Scalar::one())]);
    let obj = b.amb.trivial_module(&legs);
    let v = YDModule { b, obj, action: act, coaction, side: Side::Right };
    let rep = braided::check_yd(&v);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(v)
}

/// kG with right conjugation v◁g = g⁻¹vg and degree |h| = h.
pub fn right_adjoint_crossed_module(g: &Group) -> YDModule {
    right_crossed_module_over_group(g, &format!("ad' k{}", g.name), g.elems.clone(), &(0..g.order()).collect::<Vec<_>>(), |h, x| vec![(g.mul(g.mul(g.inv(x), h), x), Scalar::one())])
        .expect("the right adjoint crossed module is Yetter-Drinfeld")
}

/// The sign character of S3, whose elements of order two are the transpositions.
pub fn s3_sign() -> Vec<Scalar> {
    let g = Group::s3();
    (0..g.order()).map(|x| Scalar::from_int(if x != 0 && g.mul(x, x) == 0 { -1 } else { 1 })).collect()
}

/// Small crossed modules over kG on the given side: the adjoint one and
/// the one-dimensional ones of degree 1 with each character in `chars`.
pub fn crossed_modules(g: &Group, side: Side, chars: &[Vec<Scalar>]) -> Vec<YDModule> {
    let mut out = vec![match side {
        Side::Left => adjoint_crossed_module(g),
        Side::Right => right_adjoint_crossed_module(g),
    }];
    for chi in chars {
        let v = match side {
            Side::Left => one_dim_crossed_module(g, 0, chi),
            Side::Right => right_crossed_module_over_group(g, "V[1]'", vec!["v".into()], &[0], |_, x| vec![(0, chi[x].clone())]),
        };
        out.push(v.expect("degree 1 is central"));
    }
    out
}

/// The standard object of each relative module category over an ordinary
/// Hopf algebra H: H itself, acted on by the regular algebra or coalgebra
/// object, with the regular, adjoint or counit B-structure.
pub fn rel_module_instance(h: &Bialgebra, kind: RelKind) -> Result<RelModule, CatalogError> {
    let b = BraidedBialgebra::from_hopf(h);
    let obj = b.obj.clone();
    Ok(match kind {
        RelKind::ModComod => {
            let a = regular_comodule_algebra(&b);
            RelModule { kind, obj, x_map: b.mult.clone(), b_map: b.comult.clone(), partner: Partner::Alg(a) }
        }
        RelKind::ModRmod => {
            let a = right_adjoint_action(&b)?;
            RelModule { kind, obj, x_map: b.mult.clone(), b_map: a.structure.clone(), partner: Partner::Alg(a) }
        }
        RelKind::ModLmod => {
            let a = left_adjoint_action(&b)?;
            RelModule { kind, obj, x_map: b.mult.clone(), b_map: a.structure.clone(), partner: Partner::Alg(a) }
        }
        RelKind::ComodLmod => {
            let c = regular_module_coalgebra(&b);
            RelModule { kind, obj, x_map: b.comult.clone(), b_map: b.mult.clone(), partner: Partner::Coalg(c) }
        }
        RelKind::ComodRcomod => {
            let c = right_adjoint_coaction_coalgebra(h);
            RelModule { kind, obj, x_map: b.comult.clone(), b_map: c.structure.clone(), partner: Partner::Coalg(c) }
        }
    })
}

/// Named catalog entries reachable from the command line.

// ---------------------------------------------------------------------------
// cocycles on abelian groups

/// (Z/n)^r, elements ordered with the first factor most significant.
pub fn power_group(n: usize, r: usize) -> Group {
    let mut g = Group::cyclic(n);
    for _ in 1..r {
        g = Group::product(&g, &Group::cyclic(n));
    }
    g
}

fn exponents(n: usize, r: usize, mut idx: usize) -> Vec<i64> {
    let mut e = vec![0; r];
    for k in (0..r).rev() {
        e[k] = (idx % n) as i64;
        idx /= n;
    }
    e
}

fn form(m: &[Vec<i64>], a: &[i64], b: &[i64]) -> i64 {
    (0..a.len()).map(|i| (0..b.len()).map(|j| a[i] * m[i][j] * b[j]).sum::<i64>()).sum()
}

fn check_form(n: usize, m: &[Vec<i64>]) -> Result<usize, CatalogError> {
    let r = m.len();
    if n < 2 || r == 0 || m.iter().any(|row| row.len() != r) {
        return Err(CatalogError::Parameter("bicharacter needs n ≥ 2 and a square exponent matrix".into()));
    }
    Ok(r)
}

/// The bicharacter σ(a, b) = ζₙ^{aᵀMb} on k(Z/n)^r, a right 2-cocycle.
pub fn bicharacter_cocycle(n: usize, m: &[Vec<i64>]) -> Result<Cocycle2, CatalogError> {
    let r = check_form(n, m)?;
    let h = group_algebra(&power_group(n, r));
    let sp = two_legs(&h.space);
    let sigma = MultiMap::from_fn(&sp, &[], |d| {
        let (a, b) = (exponents(n, r, d[0] as usize), exponents(n, r, d[1] as usize));
        vec![(vec![], Scalar::zeta_pow(n as u32, form(m, &a, &b)))]
    });
    Cocycle2::classical(&h, sigma).map_err(|e| CatalogError::Check(e.to_string()))
}

/// The 2-cycle Σ χ(w, v) e_v ⊗ e_w in k(Z/n)^r ⊗ k(Z/n)^r, where e_v are the
/// character idempotents and χ(w, v) = ζₙ^{wᵀMv}.
pub fn bicharacter_cycle(n: usize, m: &[Vec<i64>]) -> Result<Cycle2, CatalogError> {
    let r = check_form(n, m)?;
    let g = power_group(n, r);
    let h = group_algebra(&g);
    let ord = g.order();
    let inv = Scalar::from_ratio(1, (ord * ord) as i64);
    let ex: Vec<Vec<i64>> = (0..ord).map(|i| exponents(n, r, i)).collect();
    let dot = |a: &[i64], b: &[i64]| a.iter().zip(b).map(|(x, y)| x * y).sum::<i64>();
    let mut coords = Vec::new();
    for a in 0..ord {
        for b in 0..ord {
            let mut acc = Scalar::zero();
            for v in &ex {
                for w in &ex {
                    acc += &Scalar::zeta_pow(n as u32, form(m, w, v) - dot(v, &ex[a]) - dot(w, &ex[b]));
                }
            }
            if !acc.is_zero() {
                coords.push((vec![a as u32, b as u32], &acc * &inv));
            }
        }
    }
    let c = MultiMap::vector(&two_legs(&h.space), coords);
    Ok(Cycle2 { over: BraidedBialgebra::from_hopf(&h), c })
}

/// Pairing of C = cop-k[G] with B = kG, ev(δ_x, g) = δ_{x,g}.
pub fn group_dual_pairing(g: &Group) -> Pairing {
    let b = group_algebra(g);
    let c = functions_on_group(g).cop();
    let ev = MultiMap::from_fn(&[c.space.clone(), b.space.clone()], &[], |d| if d[0] == d[1] { vec![(vec![], Scalar::one())] } else { vec![] });
    Pairing::new(BraidedBialgebra::from_hopf(&c), BraidedBialgebra::from_hopf(&b), ev)
}

/// r(gᵃ, gᵇ) = ζₙ^{ab} on kZ/n.
pub fn cyclic_dual_qt(n: usize) -> Result<DualQuasiTriangular, CatalogError> {
    if n < 2 {
        return Err(CatalogError::Parameter("n ≥ 2".into()));
    }
    let h = group_algebra(&Group::cyclic(n));
    let r = MultiMap::from_fn(&two_legs(&h.space), &[], |d| vec![(vec![], Scalar::zeta_pow(n as u32, d[0] as i64 * d[1] as i64))]);
    let d = DualQuasiTriangular::new(h, r).map_err(|e| CatalogError::Check(e.to_string()))?;
    let rep = hopf::check_dual_quasitriangular(&d);
    if !rep.passed() {
        return Err(CatalogError::Check(rep.to_string()));
    }
    Ok(d)
}

pub const NAMES: &[&str] = &[
    "kZ2", "kZ3", "kS3", "kKlein", "k[Z2]", "k[Z3]", "k[S3]", "sweedler", "taft:n=3", "taft:n=4", "cyclic-qt:n=2", "cyclic-qt:n=3", "braided-line:n=2", "braided-line:n=3",
    "braided-line:n=4", "line-pairing:n=3", "small-quantum-sl2:n=3", "double:kZ2", "double:kS3", "double:braided-line:n=3", "cyclic-dual-qt:n=3",
    "bicharacter:klein", "bicharacter:z3xz3",
];

/// A catalog object of any kind.
#[derive(Clone, Debug)]
pub enum Entry {
    Hopf(Bialgebra),
    QuasiTriangular(QuasiTriangular),
    Braided(BraidedBialgebra),
    Pairing(Pairing),
    Double(Box<DoubleAlgebra>),
    DualQuasiTriangular(DualQuasiTriangular),
    Cocycle(Box<Cocycle2>),
}

impl Entry {
    /// Run the axiom checks that apply to this kind of object.
    pub fn check(&self) -> crate::report::Report {
        match self {
            Entry::Hopf(h) => hopf::check_hopf(h),
            Entry::QuasiTriangular(q) => hopf::check_quasitriangular(q),
            Entry::Braided(b) => crate::braided::check_braided_bialgebra(b),
            Entry::Pairing(p) => double::check_pairing(p),
            Entry::Double(d) => double::check_double(d),
            Entry::DualQuasiTriangular(d) => hopf::check_dual_quasitriangular(d),
            Entry::Cocycle(c) => crate::cocycle::check_cocycle(c),
        }
    }
}

fn param(spec: &str, key: &str) -> Result<usize, CatalogError> {
    for part in spec.split(':').skip(1) {
        if let Some(v) = part.strip_prefix(&format!("{key}=")) {
            return v.parse().map_err(|_| CatalogError::Parameter(format!("bad value for {key} in `{spec}`")));
        }
    }
    Err(CatalogError::Parameter(format!("`{spec}` needs {key}=…")))
}

fn group_by_name(s: &str) -> Option<Group> {
    match s {
        "Z2" => Some(Group::cyclic(2)),
        "Z3" => Some(Group::cyclic(3)),
        "Z4" => Some(Group::cyclic(4)),
        "S3" => Some(Group::s3()),
        "Klein" => Some(Group::klein()),
        _ => None,
    }
}

/// Look up `name` (e.g. `sweedler`, `small-quantum-sl2:n=3`, `braided-line:n=3`).
pub fn lookup(name: &str) -> Result<Entry, CatalogError> {
    let head = name.split(':').next().unwrap_or("");
    if let Some(g) = head.strip_prefix("k[").and_then(|s| s.strip_suffix(']')).and_then(group_by_name) {
        return Ok(Entry::Hopf(functions_on_group(&g)));
    }
    if let Some(g) = head.strip_prefix('k').and_then(group_by_name) {
        return Ok(Entry::Hopf(group_algebra(&g)));
    }
    match head {
        "sweedler" => Ok(Entry::Hopf(sweedler())),
        "taft" => Ok(Entry::Hopf(taft(param(name, "n")?)?)),
        "cyclic-qt" => Ok(Entry::QuasiTriangular(cyclic_qt(param(name, "n")?, 1)?)),
        "braided-line" => Ok(Entry::Braided(braided_line(param(name, "n")?)?)),
        "line-pairing" => Ok(Entry::Pairing(braided_line_pairing(param(name, "n")?)?)),
        "small-quantum-sl2" => Ok(Entry::Double(Box::new(small_quantum_sl2(param(name, "n")?)?))),
        "cyclic-dual-qt" => Ok(Entry::DualQuasiTriangular(cyclic_dual_qt(param(name, "n")?)?)),
        "bicharacter" => {
            let c = match name {
                "bicharacter:klein" => bicharacter_cocycle(2, &[vec![0, 1], vec![0, 0]])?,
                "bicharacter:z3xz3" => bicharacter_cocycle(3, &[vec![1, 1], vec![0, 2]])?,
                _ => return Err(CatalogError::Unknown(name.to_string())),
            };
            Ok(Entry::Cocycle(Box::new(c)))
        }
        "double" => {
            let rest = &name["double:".len().min(name.len())..];
            let p = pairing_by_name(rest)?;
            Ok(Entry::Double(Box::new(double::drinfeld_double(&p)?)))
        }
        _ => Err(CatalogError::Unknown(name.to_string())),
    }
}

/// Pairings by name: `kG` for the classical double pairing of a group
/// algebra, `braided-line:n=…`, `sl2:n=…`.
pub fn pairing_by_name(name: &str) -> Result<Pairing, CatalogError> {
    let head = name.split(':').next().unwrap_or("");
    if let Some(g) = head.strip_prefix('k').and_then(group_by_name) {
        return Ok(double::classical_pairing(&group_algebra(&g)));
    }
    match head {
        "sweedler" => Ok(double::classical_pairing(&sweedler())),
        "braided-line" | "line-pairing" => braided_line_pairing(param(name, "n")?),
        "sl2" | "small-quantum-sl2" => sl2_pairing(param(name, "n")?),
        _ => Err(CatalogError::Unknown(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hopf::check_hopf;

    fn assert_ok(r: crate::report::Report) {
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn groups_are_groups() {
        for g in [Group::cyclic(1), Group::cyclic(4), Group::s3(), Group::klein()] {
            let again = Group::from_table("t", g.elems.clone(), g.table.clone()).unwrap();
            assert_eq!(again.order(), g.order());
        }
        assert!(!Group::s3().is_abelian());
        assert!(Group::klein().is_abelian());
        let bad = Group::from_table("bad", vec!["a".into(), "b".into()], vec![vec![0, 0], vec![0, 0]]);
        assert!(bad.is_err());
    }

    #[test]
    fn group_hopf_algebras() {
        for g in [Group::cyclic(3), Group::s3()] {
            assert_ok(check_hopf(&group_algebra(&g)));
            let f = functions_on_group(&g);
            assert_ok(check_hopf(&f));
            let d = hopf::dual_hopf(&group_algebra(&g), "dual");
            assert_eq!(f.mult, d.mult);
            assert_eq!(f.comult, d.comult);
            assert_eq!(f.counit, d.counit);
            assert_eq!(f.unit, d.unit);
        }
    }

    #[test]
    fn taft_and_sweedler() {
        let s = sweedler();
        assert_ok(check_hopf(&s));
        assert_eq!(s.dim(), 4);
        // S(x) = -g⁻¹x = -gx = xg in Sweedler
        let x = s.element("x");
        assert_eq!(x.then(s.s()), s.element("xg"));
        for n in 3..=4 {
            let t = taft(n).unwrap();
            assert_ok(check_hopf(&t));
            // the antipode of a Taft algebra has order 2n
            let mut p = t.identity();
            let mut order = 0;
            for k in 1..=2 * n {
                p = p.then(t.s());
                if p == t.identity() {
                    order = k;
                    break;
                }
            }
            assert_eq!(order, 2 * n);
        }
    }

    #[test]
    fn cyclic_r_matrices() {
        for (n, k) in [(2, 1), (3, 1), (3, 2), (5, 2), (4, 3)] {
            let qt = cyclic_qt(n, k).unwrap();
            assert_ok(hopf::check_quasitriangular(&qt));
        }
        assert!(cyclic_qt(4, 2).is_err());
    }

    #[test]
    fn braided_lines_and_pairings() {
        for n in 2..=4 {
            let b = braided_line(n).unwrap();
            assert_eq!(b.dim(), n);
            assert_ok(double::check_pairing(&braided_line_pairing(n).unwrap()));
        }
        assert_ok(double::check_pairing(&sl2_pairing(3).unwrap()));
        assert!(sl2_pairing(2).is_err());
        assert!(sl2_pairing(4).is_err());
    }

    #[test]
    fn line_pairing_values_follow_the_recursion() {
        let p = LineParams { n: 5, k: 1, w: 1 };
        let q = Scalar::zeta_pow(5, p.q_exponent());
        let lambda = Scalar::from_int(3);
        let pr = braided_line_pairing_with(p, &lambda, "x", "f").unwrap();
        let mut c = Scalar::one();
        for a in 0..5u32 {
            if a > 0 {
                c = &(&c * &crate::scalar::q_int(&q, a)) * &lambda;
            }
            assert_eq!(pr.ev.get(&[], &[a, a]), c);
        }
    }

    #[test]
    fn adjoint_crossed_module_is_yd() {
        let v = adjoint_crossed_module(&Group::s3());
        assert_eq!(v.legs()[0].dim(), 6);
        let g = Group::s3();
        // degree must be preserved up to conjugation, a shift breaks it
        let bad = crossed_module_over_group(&g, "bad", g.elems.clone(), &(0..6).collect::<Vec<_>>(), |x, h| vec![(g.mul(x, h), Scalar::one())]);
        assert!(bad.is_err());
    }

    #[test]
    fn lookup_names() {
        for name in NAMES {
            if name.starts_with("double:kS3") {
                continue;
            }
            lookup(name).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
        assert!(matches!(lookup("nonsense"), Err(CatalogError::Unknown(_))));
    }
}
