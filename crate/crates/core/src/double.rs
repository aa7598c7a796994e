//! Dual pairings of braided bialgebras, the braided Drinfeld and Heisenberg
//! doubles, crossed products, bosonization, and the comodule algebras over
//! the double built from comodule algebras over B or C.
//!
//! Products in the doubles are computed by straightening words in letters
//! from B, H and C into the normal order B·H·C.

use std::collections::HashMap;

use crate::braided::{cat, check_left_action_raw, Ambient, AlgObject, BraidedBialgebra, BraidedError, HModule, Side, StructKind, YDModule};
use crate::hopf::{self, Algebra, Bialgebra, HopfError, QuasiTriangular};
use crate::linalg;
use crate::network::{Net, Wire};
use crate::report::Report;
use crate::scalar::Scalar;
use crate::tensor::{flatten, multi_indices, unflatten, MultiMap, Space};

/// Default bound on rewrite steps per double construction.
pub const DEFAULT_MAX_STEPS: u64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DoubleError {
    #[error(transparent)]
    Braided(#[from] BraidedError),
    #[error(transparent)]
    Hopf(#[from] HopfError),
    #[error("straightening exceeded {0} rewrite steps")]
    Budget(u64),
    #[error("{0}")]
    Invalid(String),
}

/// A pairing ev: C⊗B → k of bialgebras in the same ambient category, with
/// coev: k → B⊗C when ev is non-degenerate.
#[derive(Clone, Debug)]
pub struct Pairing {
    pub c: BraidedBialgebra,
    pub b: BraidedBialgebra,
    pub ev: MultiMap,
    pub coev: Option<MultiMap>,
}

impl Pairing {
    pub fn new(c: BraidedBialgebra, b: BraidedBialgebra, ev: MultiMap) -> Pairing {
        let coev = coevaluation(&ev, c.space(), b.space());
        Pairing { c, b, ev, coev }
    }

    pub fn amb(&self) -> &Ambient {
        &self.b.amb
    }

    pub fn is_hopf(&self) -> bool {
        self.b.is_hopf() && self.c.is_hopf()
    }

    /// Matrix of ev as a map B → C (entry (c, b) = ev(c, b)).
    fn matrix(&self) -> MultiMap {
        let (c, b) = (self.c.space(), self.b.space());
        MultiMap::from_triples(&[b.clone()], &[c.clone()], self.ev.iter().map(|(_, d, v)| (vec![d[0]], vec![d[1]], v.clone())))
    }
}

/// coev = Σ e_α⊗f^α with Σ_α ev(c, e_α) f^α = c, if ev is invertible.
fn coevaluation(ev: &MultiMap, c: &Space, b: &Space) -> Option<MultiMap> {
    if c.dim() != b.dim() {
        return None;
    }
    let m = MultiMap::from_triples(&[b.clone()], &[c.clone()], ev.iter().map(|(_, d, v)| (vec![d[0]], vec![d[1]], v.clone())));
    let k = linalg::inverse(&m)?;
    // k: C → B with k[b][c]
    Some(MultiMap::from_keys(&[], &[b.clone(), c.clone()], k.iter().map(|(cod, dom, v)| (vec![cod[0], dom[0]], v.clone()))))
}

pub fn pairing_rank(p: &Pairing) -> usize {
    linalg::rank(&p.matrix())
}

/// Pairing axioms: H-linearity, compatibility with products, units and
/// (for Hopf pairs) antipodes, and the zig-zag identities when coev exists.
pub fn check_pairing(p: &Pairing) -> Report {
    let mut rep = Report::new("pairing");
    let (c, b) = (&p.c, &p.b);
    let amb = p.amb();
    let same = amb.same_category(&c.amb) && amb.inverse == c.amb.inverse;
    rep.check("C and B live in the same ambient category", same, None);
    let cb = amb.tensor(&c.obj, &b.obj);
    amb.check_equivariant(&mut rep, "ev", &p.ev, &cb, &amb.unit_object());
    let (cs, bs) = (c.space().clone(), b.space().clone());

    let mut n = Net::new();
    let x = n.inputs(&[cs.clone(), cs.clone(), bs.clone()]);
    let m = n.apply1(&c.mult, &[x[0], x[1]]);
    n.apply(&p.ev, &[m, x[2]]);
    let lhs = n.eval(&[]);
    let mut n = Net::new();
    let x = n.inputs(&[cs.clone(), cs.clone(), bs.clone()]);
    let d = n.apply(&b.comult, &[x[2]]);
    n.apply(&p.ev, &[x[1], d[0]]);
    n.apply(&p.ev, &[x[0], d[1]]);
    rep.equal("ev(cc', b) = ev(c', b1) ev(c, b2)", &lhs, &n.eval(&[]));

    let mut n = Net::new();
    let x = n.inputs(&[cs.clone(), bs.clone(), bs.clone()]);
    let m = n.apply1(&b.mult, &[x[1], x[2]]);
    n.apply(&p.ev, &[x[0], m]);
    let lhs = n.eval(&[]);
    let mut n = Net::new();
    let x = n.inputs(&[cs.clone(), bs.clone(), bs.clone()]);
    let d = n.apply(&c.comult, &[x[0]]);
    n.apply(&p.ev, &[d[1], x[1]]);
    n.apply(&p.ev, &[d[0], x[2]]);
    rep.equal("ev(c, bb') = ev(c2, b) ev(c1, b')", &lhs, &n.eval(&[]));

    rep.equal("ev(1, b) = counit(b)", &c.unit.tensor(&b.identity()).then(&p.ev), &b.counit);
    rep.equal("ev(c, 1) = counit(c)", &c.identity().tensor(&b.unit).then(&p.ev), &c.counit);

    if let (Ok(sc), Ok(sb)) = (c.s(), b.s()) {
        rep.equal("ev(S c, b) = ev(c, S b)", &sc.tensor(&b.identity()).then(&p.ev), &c.identity().tensor(sb).then(&p.ev));
    }
    if let Some(coev) = &p.coev {
        amb.check_equivariant(&mut rep, "coev", coev, &amb.unit_object(), &amb.tensor(&b.obj, &c.obj));
        let mut n = Net::new();
        let x = n.input(&cs);
        let e = n.apply(coev, &[]);
        n.apply(&p.ev, &[x, e[0]]);
        rep.equal("(ev ⊗ id_C)(id_C ⊗ coev) = id_C", &n.eval(&[e[1]]), &c.identity());
        let mut n = Net::new();
        let x = n.input(&bs);
        let e = n.apply(coev, &[]);
        n.apply(&p.ev, &[e[1], x]);
        rep.equal("(id_B ⊗ ev)(coev ⊗ id_B) = id_B", &n.eval(&[e[0]]), &b.identity());
    }
    rep
}

/// Ways of turning a coaction into an action through the pairing.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualityVariant {
    /// Left B-coaction δ: X → B⊗X to a left action of cop-C: c▷x = ev(c, x₋₁)x₀.
    BToCopC,
    /// Left cop-C-coaction δ: X → C⊗X to a left B-action (ev⊗id)(Ψ_{B,C}⊗id)(S⊗δ).
    CopCToB,
    /// Right C-coaction δ: X → X⊗C to a left B-action (id⊗ev)(δ⊗id)Ψ_{B,X}(S⊗id).
    InducedRight,
}

pub fn coaction_to_action(p: &Pairing, x: &HModule, coaction: &MultiMap, variant: DualityVariant) -> Result<MultiMap, DoubleError> {
    let amb = p.amb();
    let k = x.legs.len();
    let mut n = Net::new();
    match variant {
        DualityVariant::BToCopC => {
            let c = n.input(p.c.space());
            let xi = n.inputs(&x.legs);
            let d = n.apply(coaction, &xi);
            n.apply(&p.ev, &[c, d[0]]);
            Ok(n.eval(&d[1..]))
        }
        DualityVariant::CopCToB => {
            let s = p.b.s()?.clone();
            let b = n.input(p.b.space());
            let xi = n.inputs(&x.legs);
            let sb = n.apply1(&s, &[b]);
            let d = n.apply(coaction, &xi);
            let (cw, bw) = amb.braid_wires(&mut n, &p.b.obj, &p.c.obj, &[sb], &[d[0]]);
            n.apply(&p.ev, &[cw[0], bw[0]]);
            Ok(n.eval(&d[1..]))
        }
        DualityVariant::InducedRight => {
            let s = p.b.s()?.clone();
            let b = n.input(p.b.space());
            let xi = n.inputs(&x.legs);
            let sb = n.apply1(&s, &[b]);
            let (xw, bw) = amb.braid_wires(&mut n, &p.b.obj, x, &[sb], &xi);
            let d = n.apply(coaction, &xw);
            n.apply(&p.ev, &[d[k], bw[0]]);
            Ok(n.eval(&d[..k]))
        }
    }
}

// ---------------------------------------------------------------------------
// straightening

const NONE: u32 = u32::MAX;

/// Normal-ordered monomial x·h·y; `NONE` marks an absent letter.
pub type Mono = [u32; 3];

type Comb = Vec<(Mono, Scalar)>;
type Word = Vec<(u8, u32)>;
type Table = HashMap<(u32, u32), Vec<(Word, Scalar)>>;

fn table(map: &MultiMap, slots: &[u8]) -> Table {
    let mut t: Table = HashMap::new();
    for (cod, dom, v) in map.iter() {
        let w: Word = slots.iter().zip(cod).map(|(&s, &i)| (s, i)).collect();
        t.entry((dom[0], dom[1])).or_default().push((w, v.clone()));
    }
    t
}

/// Rewrite system on words in three algebras X < H < Y (slots 0, 1, 2):
/// y·x ↦ `cross`, h·x ↦ x′·h′, y·h ↦ h′·y′, and equal-slot letters merge.
/// Letters are absorbed one at a time into a normal monomial, so every
/// rewrite acts at the right end of a normal word.
pub struct Straightener {
    pub spaces: [Space; 3],
    units: [Vec<(u32, Scalar)>; 3],
    merge: [Table; 3],
    cross: Table,
    hx: Table,
    yh: Table,
    memo: HashMap<(Mono, u8, u32), Comb>,
    pub steps: u64,
    pub budget: u64,
}

impl Straightener {
    /// `cross`: Y⊗X → legs with slot pattern `cross_slots`; `hx`: H⊗X → X⊗H;
    /// `yh`: Y⊗H → H⊗Y.
    pub fn new(algs: [(&Space, &MultiMap, &MultiMap); 3], cross: &MultiMap, cross_slots: &[u8], hx: &MultiMap, yh: &MultiMap, budget: u64) -> Straightener {
        let unit = |u: &MultiMap| u.iter().map(|(c, _, v)| (c[0], v.clone())).collect::<Vec<_>>();
        Straightener {
            spaces: [algs[0].0.clone(), algs[1].0.clone(), algs[2].0.clone()],
            units: [unit(algs[0].2), unit(algs[1].2), unit(algs[2].2)],
            merge: [table(algs[0].1, &[0]), table(algs[1].1, &[1]), table(algs[2].1, &[2])],
            cross: table(cross, cross_slots),
            hx: table(hx, &[0, 1]),
            yh: table(yh, &[1, 2]),
            memo: HashMap::new(),
            steps: 0,
            budget,
        }
    }

    fn tick(&mut self) -> Result<(), DoubleError> {
        self.steps += 1;
        if self.steps > self.budget {
            Err(DoubleError::Budget(self.budget))
        } else {
            Ok(())
        }
    }

    fn rewrite(&mut self, base: Mono, rules: Vec<(Word, Scalar)>) -> Result<Comb, DoubleError> {
        let mut acc: HashMap<Mono, Scalar> = HashMap::new();
        for (w, k) in rules {
            for (m, v) in self.apply_word(base, &w)? {
                *acc.entry(m).or_insert_with(Scalar::zero) += &(&k * &v);
            }
        }
        Ok(collect(acc))
    }

    fn merged(&mut self, m: Mono, s: u8, i: u32) -> Comb {
        let si = s as usize;
        if m[si] == NONE {
            let mut t = m;
            t[si] = i;
            return vec![(t, Scalar::one())];
        }
        let rules = self.merge[si].get(&(m[si], i)).cloned().unwrap_or_default();
        rules
            .into_iter()
            .map(|(w, k)| {
                let mut t = m;
                t[si] = w[0].1;
                (t, k)
            })
            .collect()
    }

    /// Normal form of (monomial)·(letter).
    pub fn mult_letter(&mut self, m: Mono, s: u8, i: u32) -> Result<Comb, DoubleError> {
        if let Some(r) = self.memo.get(&(m, s, i)) {
            return Ok(r.clone());
        }
        self.tick()?;
        let res = match s {
            2 => self.merged(m, 2, i),
            1 if m[2] != NONE => {
                let rules = self.yh.get(&(m[2], i)).cloned().unwrap_or_default();
                self.rewrite([m[0], m[1], NONE], rules)?
            }
            1 => self.merged(m, 1, i),
            _ if m[2] != NONE => {
                let rules = self.cross.get(&(m[2], i)).cloned().unwrap_or_default();
                self.rewrite([m[0], m[1], NONE], rules)?
            }
            _ if m[1] != NONE => {
                let rules = self.hx.get(&(m[1], i)).cloned().unwrap_or_default();
                self.rewrite([m[0], NONE, NONE], rules)?
            }
            _ => self.merged(m, 0, i),
        };
        self.memo.insert((m, s, i), res.clone());
        Ok(res)
    }

    pub fn apply_word(&mut self, base: Mono, word: &[(u8, u32)]) -> Result<Comb, DoubleError> {
        let mut comb = vec![(base, Scalar::one())];
        for &(s, i) in word {
            let mut acc: HashMap<Mono, Scalar> = HashMap::new();
            for (m, k) in comb {
                for (t, v) in self.mult_letter(m, s, i)? {
                    *acc.entry(t).or_insert_with(Scalar::zero) += &(&k * &v);
                }
            }
            comb = collect(acc);
        }
        Ok(comb)
    }

    /// Replace absent letters by the unit vectors of their algebras.
    pub fn finalize(&self, comb: Comb) -> Vec<(Mono, Scalar)> {
        let mut acc: HashMap<Mono, Scalar> = HashMap::new();
        for (m, k) in comb {
            let opts: Vec<Vec<(u32, Scalar)>> = (0..3).map(|s| if m[s] == NONE { self.units[s].clone() } else { vec![(m[s], Scalar::one())] }).collect();
            for (a, va) in &opts[0] {
                for (b, vb) in &opts[1] {
                    for (c, vc) in &opts[2] {
                        *acc.entry([*a, *b, *c]).or_insert_with(Scalar::zero) += &(&(&k * va) * &(vb * vc));
                    }
                }
            }
        }
        collect(acc)
    }

    /// Normal form of an arbitrary word.
    pub fn normal_form(&mut self, word: &[(u8, u32)]) -> Result<Vec<(Mono, Scalar)>, DoubleError> {
        let c = self.apply_word([NONE; 3], word)?;
        Ok(self.finalize(c))
    }

    /// The product on the normal-ordered basis, as a map XHY⊗XHY → XHY on `space`.
    pub fn product_map(&mut self, space: &Space) -> Result<MultiMap, DoubleError> {
        let parts = self.spaces.clone();
        let mut triples = Vec::new();
        for a in multi_indices(&parts) {
            for b in multi_indices(&parts) {
                let base = [a[0], a[1], a[2]];
                let c = self.apply_word(base, &[(0, b[0]), (1, b[1]), (2, b[2])])?;
                for (m, v) in self.finalize(c) {
                    triples.push((vec![flatten(&parts, &m) as u32], vec![flatten(&parts, &a) as u32, flatten(&parts, &b) as u32], v));
                }
            }
        }
        Ok(MultiMap::from_triples(&[space.clone(), space.clone()], std::slice::from_ref(space), triples))
    }
}

fn collect(acc: HashMap<Mono, Scalar>) -> Comb {
    let mut v: Comb = acc.into_iter().filter(|(_, s)| !s.is_zero()).collect();
    v.sort_by(|a, b| a.0.cmp(&b.0));
    v
}

// ---------------------------------------------------------------------------
// doubles

/// Algebra on the fused space of several legs, with the embedding of each leg.
#[derive(Clone, Debug)]
pub struct CrossProduct {
    pub algebra: Algebra,
    pub legs: Vec<Space>,
    pub embed: Vec<MultiMap>,
    /// H-action on the fused space (trivial-ambient results carry none).
    pub action: Option<MultiMap>,
}

impl CrossProduct {
    pub fn space(&self) -> &Space {
        &self.algebra.space
    }

    pub fn mul(&self, a: &MultiMap, b: &MultiMap) -> MultiMap {
        a.tensor(b).then(&self.algebra.mult)
    }
}

/// The braided Drinfeld double of a Hopf pairing, on the basis B⊗H⊗C.
#[derive(Clone, Debug)]
pub struct DoubleAlgebra {
    pub pairing: Pairing,
    /// Ordinary Hopf algebra on the fused B⊗H⊗C basis (closed-form antipode).
    pub hopf: Bialgebra,
    pub legs: [Space; 3],
    /// Embeddings of B, H, C.
    pub embed: [MultiMap; 3],
    /// Antipode found by solving S∗id = uε, for comparison.
    pub antipode_solved: MultiMap,
    /// Universal R-matrix, when the pairing is non-degenerate.
    pub r: Option<QuasiTriangular>,
    /// Normal form of c·b in B⊗H⊗C.
    pub straightening: MultiMap,
    pub rewrite_steps: u64,
}

fn embedding(parts: &[Space], fused: &Space, slot: usize, units: &[MultiMap]) -> MultiMap {
    let mut n = Net::new();
    let x = n.input(&parts[slot]);
    let outs: Vec<Wire> = units.iter().enumerate().map(|(k, u)| if k == slot { x } else { n.apply1(u, &[]) }).collect();
    let f = n.apply1(&MultiMap::fuse(parts, fused), &outs);
    n.eval(&[f])
}

fn h_as_braided(amb: &Ambient) -> BraidedBialgebra {
    BraidedBialgebra::from_hopf(amb.h())
}

/// Rules shared by the doubles: h·b = (h₁▷b)h₂ and c·h = h₂(S⁻¹h₁▷c).
fn h_rules(p: &Pairing) -> (MultiMap, MultiMap) {
    let h = p.amb().h();
    let mut n = Net::new();
    let hw = n.input(&h.space);
    let bw = n.input(p.b.space());
    let d = n.apply(&h.comult, &[hw]);
    let b2 = n.apply1(&p.b.obj.action, &[d[0], bw]);
    let hx = n.eval(&[b2, d[1]]);
    let mut n = Net::new();
    let cw = n.input(p.c.space());
    let hw = n.input(&h.space);
    let d = n.apply(&h.comult, &[hw]);
    let s = n.apply1(h.s_inv(), &[d[0]]);
    let c2 = n.apply1(&p.c.obj.action, &[s, cw]);
    let yh = n.eval(&[d[1], c2]);
    (hx, yh)
}

/// Normal form of c·b in the double:
/// cb = R₁⁻⁽¹⁾(R₂⁻⁽¹⁾▷b₂)(R₂⁻⁽²⁾▷c₂)R⁽²⁾ ev(R₁⁻⁽²⁾▷c₁, R⁽¹⁾▷Sb₃) ev(c₃, b₁),
/// returned as C⊗B → H⊗B⊗C⊗H.
pub fn drinfeld_cross_relation(p: &Pairing) -> Result<MultiMap, DoubleError> {
    let amb = p.amb();
    let (r, ri) = (amb.r_matrix(), amb.r_matrix_inv());
    let sb = p.b.s()?.clone();
    let mut n = Net::new();
    let c = n.input(p.c.space());
    let b = n.input(p.b.space());
    let dc = n.apply(&p.c.comult, &[c]);
    let dc2 = n.apply(&p.c.comult, &[dc[1]]);
    let (c1, c2, c3) = (dc[0], dc2[0], dc2[1]);
    let db = n.apply(&p.b.comult, &[b]);
    let db2 = n.apply(&p.b.comult, &[db[1]]);
    let (b1, b2, b3) = (db[0], db2[0], db2[1]);
    let p1 = n.apply(&ri, &[]);
    let q = n.apply(&ri, &[]);
    let rr = n.apply(&r, &[]);
    let bo = n.apply1(&p.b.obj.action, &[q[0], b2]);
    let co = n.apply1(&p.c.obj.action, &[q[1], c2]);
    let x = n.apply1(&p.c.obj.action, &[p1[1], c1]);
    let s3 = n.apply1(&sb, &[b3]);
    let y = n.apply1(&p.b.obj.action, &[rr[0], s3]);
    n.apply(&p.ev, &[x, y]);
    n.apply(&p.ev, &[c3, b1]);
    Ok(n.eval(&[p1[0], bo, co, rr[1]]))
}

/// c·b = (R⁻⁽¹⁾▷b₂)(R⁻⁽²⁾▷c₁) ev(c₂, b₁), as C⊗B → B⊗C.
pub fn heisenberg_cross_relation(p: &Pairing) -> MultiMap {
    let ri = p.amb().r_matrix_inv();
    let mut n = Net::new();
    let c = n.input(p.c.space());
    let b = n.input(p.b.space());
    let dc = n.apply(&p.c.comult, &[c]);
    let db = n.apply(&p.b.comult, &[b]);
    let q = n.apply(&ri, &[]);
    let bo = n.apply1(&p.b.obj.action, &[q[0], db[1]]);
    let co = n.apply1(&p.c.obj.action, &[q[1], dc[0]]);
    n.apply(&p.ev, &[dc[1], db[0]]);
    n.eval(&[bo, co])
}

fn bhc_parts(p: &Pairing) -> [Space; 3] {
    [p.b.space().clone(), p.amb().hspace().clone(), p.c.space().clone()]
}

fn make_straightener(p: &Pairing, cross: &MultiMap, slots: &[u8], budget: u64) -> Straightener {
    let h = p.amb().h();
    let (hx, yh) = h_rules(p);
    Straightener::new(
        [(p.b.space(), &p.b.mult, &p.b.unit), (&h.space, &h.mult, &h.unit), (p.c.space(), &p.c.mult, &p.c.unit)],
        cross,
        slots,
        &hx,
        &yh,
        budget,
    )
}

pub fn drinfeld_double(p: &Pairing) -> Result<DoubleAlgebra, DoubleError> {
    drinfeld_double_with_budget(p, DEFAULT_MAX_STEPS)
}

pub fn drinfeld_double_with_budget(p: &Pairing, budget: u64) -> Result<DoubleAlgebra, DoubleError> {
    if !p.is_hopf() {
        return Err(DoubleError::Invalid("the double is built for Hopf pairings; attach antipodes first".into()));
    }
    let amb = p.amb().clone();
    let h = amb.h().clone();
    let parts = bhc_parts(p);
    let space = Space::fused("Drin", &parts);
    let cross = drinfeld_cross_relation(p)?;
    let mut st = make_straightener(p, &cross, &[1, 0, 2, 1], budget);
    let mult = st.product_map(&space)?;
    let one = std::slice::from_ref(&space);
    let unit = MultiMap::vector(one, st.finalize(vec![([NONE; 3], Scalar::one())]).into_iter().map(|(m, v)| (vec![flatten(&parts, &m) as u32], v)).collect());
    let units = [p.b.unit.clone(), h.unit.clone(), p.c.unit.clone()];
    let embed = [embedding(&parts, &space, 0, &units), embedding(&parts, &space, 1, &units), embedding(&parts, &space, 2, &units)];
    let (eb, eh, ec) = (&embed[0], &embed[1], &embed[2]);
    let (r, ri) = (amb.r_matrix(), amb.r_matrix_inv());

    // Δb = b₁R⁽²⁾ ⊗ R⁽¹⁾▷b₂
    let mut n = Net::new();
    let b = n.input(p.b.space());
    let d = n.apply(&p.b.comult, &[b]);
    let rr = n.apply(&r, &[]);
    let x1 = n.apply1(eb, &[d[0]]);
    let x2 = n.apply1(eh, &[rr[1]]);
    let x = n.apply1(&mult, &[x1, x2]);
    let y0 = n.apply1(&p.b.obj.action, &[rr[0], d[1]]);
    let y = n.apply1(eb, &[y0]);
    let gb = n.eval(&[x, y]);
    // Δh = h₁ ⊗ h₂
    let gh = h.comult.then(&eh.tensor(eh));
    // Δc = R⁻⁽¹⁾c₂ ⊗ R⁻⁽²⁾▷c₁
    let mut n = Net::new();
    let c = n.input(p.c.space());
    let d = n.apply(&p.c.comult, &[c]);
    let q = n.apply(&ri, &[]);
    let x1 = n.apply1(eh, &[q[0]]);
    let x2 = n.apply1(ec, &[d[1]]);
    let x = n.apply1(&mult, &[x1, x2]);
    let y0 = n.apply1(&p.c.obj.action, &[q[1], d[0]]);
    let y = n.apply1(ec, &[y0]);
    let gc = n.eval(&[x, y]);

    let split = MultiMap::split(&space, &parts);
    let mut n = Net::new();
    let z = n.input(&space);
    let s = n.apply(&split, &[z]);
    let a = n.apply(&gb, &[s[0]]);
    let bb = n.apply(&gh, &[s[1]]);
    let cc = n.apply(&gc, &[s[2]]);
    let l1 = n.apply1(&mult, &[a[0], bb[0]]);
    let l = n.apply1(&mult, &[l1, cc[0]]);
    let r1 = n.apply1(&mult, &[a[1], bb[1]]);
    let rt = n.apply1(&mult, &[r1, cc[1]]);
    let comult = n.eval(&[l, rt]);
    let counit = split.then(&p.b.counit.tensor(&h.counit).tensor(&p.c.counit));

    // S(bhc) = S(c)S(h)S(b), S(b) = S(R⁽²⁾)(R⁽¹⁾▷Sb), S(c) = S(R⁻⁽¹⁾)(R⁻⁽²⁾▷S⁻¹c)
    let mut n = Net::new();
    let z = n.input(&space);
    let s = n.apply(&split, &[z]);
    let rr = n.apply(&r, &[]);
    let sr = n.apply1(h.s(), &[rr[1]]);
    let sb0 = n.apply1(p.b.s()?, &[s[0]]);
    let sb1 = n.apply1(&p.b.obj.action, &[rr[0], sb0]);
    let u1 = n.apply1(eh, &[sr]);
    let u2 = n.apply1(eb, &[sb1]);
    let s_b = n.apply1(&mult, &[u1, u2]);
    let sh0 = n.apply1(h.s(), &[s[1]]);
    let s_h = n.apply1(eh, &[sh0]);
    let q = n.apply(&ri, &[]);
    let sq = n.apply1(h.s(), &[q[0]]);
    let sc0 = n.apply1(p.c.s_inv()?, &[s[2]]);
    let sc1 = n.apply1(&p.c.obj.action, &[q[1], sc0]);
    let v1 = n.apply1(eh, &[sq]);
    let v2 = n.apply1(ec, &[sc1]);
    let s_c = n.apply1(&mult, &[v1, v2]);
    let t = n.apply1(&mult, &[s_c, s_h]);
    let o = n.apply1(&mult, &[t, s_b]);
    let antipode = n.eval(&[o]);

    let mut hopf = Bialgebra::new(space.clone(), mult.clone(), unit, comult, counit);
    let antipode_solved = hopf::find_antipode(&hopf)?;
    let antipode_inv = linalg::inverse(&antipode).ok_or(HopfError::AntipodeNotInvertible)?;
    hopf.antipode = Some(antipode);
    hopf.antipode_inv = Some(antipode_inv);

    // R_Drin = R⁽¹⁾f^α ⊗ e_α R⁽²⁾ with coev = e_α ⊗ f^α
    let r_drin = match &p.coev {
        Some(coev) => {
            let mut n = Net::new();
            let e = n.apply(coev, &[]);
            let rr = n.apply(&r, &[]);
            let a1 = n.apply1(eh, &[rr[0]]);
            let a2 = n.apply1(ec, &[e[1]]);
            let x = n.apply1(&mult, &[a1, a2]);
            let b1 = n.apply1(eb, &[e[0]]);
            let b2 = n.apply1(eh, &[rr[1]]);
            let y = n.apply1(&mult, &[b1, b2]);
            QuasiTriangular::new(hopf.clone(), n.eval(&[x, y]))
        }
        None => None,
    };

    let straightening = {
        let (cs, bs) = (p.c.space().clone(), p.b.space().clone());
        let mut triples = Vec::new();
        for ci in 0..cs.dim() as u32 {
            for bi in 0..bs.dim() as u32 {
                for (m, v) in st.normal_form(&[(2, ci), (0, bi)])? {
                    triples.push((m.to_vec(), vec![ci, bi], v));
                }
            }
        }
        MultiMap::from_triples(&[cs, bs], &parts, triples)
    };

    Ok(DoubleAlgebra { pairing: p.clone(), hopf, legs: parts, embed, antipode_solved, r: r_drin, straightening, rewrite_steps: st.steps })
}

impl DoubleAlgebra {
    pub fn space(&self) -> &Space {
        &self.hopf.space
    }

    pub fn mul(&self, a: &MultiMap, b: &MultiMap) -> MultiMap {
        self.hopf.mul(a, b)
    }

    /// Element b·h·c of the double from elements of B, H, C.
    pub fn monomial(&self, b: &MultiMap, h: &MultiMap, c: &MultiMap) -> MultiMap {
        let x = b.then(&self.embed[0]);
        let y = h.then(&self.embed[1]);
        let z = c.then(&self.embed[2]);
        self.mul(&self.mul(&x, &y), &z)
    }

    pub fn from_b(&self, b: &MultiMap) -> MultiMap {
        b.then(&self.embed[0])
    }

    pub fn from_h(&self, h: &MultiMap) -> MultiMap {
        h.then(&self.embed[1])
    }

    pub fn from_c(&self, c: &MultiMap) -> MultiMap {
        c.then(&self.embed[2])
    }

    /// Change of basis C⊗H⊗B → B⊗H⊗C sending c⊗h⊗b to the product c·h·b.
    pub fn chb_basis_change(&self) -> (Space, MultiMap) {
        let [b, h, c] = self.legs.clone();
        let parts = [c, h, b];
        let chb = Space::fused("Drin(CHB)", &parts);
        let mut n = Net::new();
        let z = n.input(&chb);
        let s = n.apply(&MultiMap::split(&chb, &parts), &[z]);
        let x = n.apply1(&self.embed[2], &[s[0]]);
        let y = n.apply1(&self.embed[1], &[s[1]]);
        let w = n.apply1(&self.embed[0], &[s[2]]);
        let xy = n.apply1(&self.hopf.mult, &[x, y]);
        let o = n.apply1(&self.hopf.mult, &[xy, w]);
        (chb, n.eval(&[o]))
    }

    /// The same Hopf algebra presented on the C⊗H⊗B basis.
    pub fn hopf_chb(&self) -> Result<Bialgebra, DoubleError> {
        let (chb, t) = self.chb_basis_change();
        let ti = linalg::inverse(&t).ok_or_else(|| DoubleError::Invalid("C·H·B monomials are not a basis".into()))?;
        Ok(transport(&self.hopf, &chb, &t, &ti))
    }
}

/// Transport a bialgebra along an isomorphism t: new → old (ti its inverse).
pub fn transport(b: &Bialgebra, new: &Space, t: &MultiMap, ti: &MultiMap) -> Bialgebra {
    let one = std::slice::from_ref(new);
    let conj = |m: &MultiMap| t.then(m).then(ti).relabel(one, one);
    Bialgebra {
        space: new.clone(),
        mult: t.tensor(t).then(&b.mult).then(ti).relabel(&[new.clone(), new.clone()], one),
        unit: b.unit.then(ti).relabel(&[], one),
        comult: t.then(&b.comult).then(&ti.tensor(ti)).relabel(one, &[new.clone(), new.clone()]),
        counit: t.then(&b.counit).relabel(one, &[]),
        antipode: b.antipode.as_ref().map(conj),
        antipode_inv: b.antipode_inv.as_ref().map(conj),
    }
}

/// Hopf axioms, closed vs solved antipode, triangular decomposition,
/// embeddings and (if present) the R-matrix of the double.
pub fn check_double(d: &DoubleAlgebra) -> Report {
    let mut rep = Report::new(format!("braided Drinfeld double (dim {})", d.hopf.dim()));
    rep.absorb("", hopf::check_hopf(&d.hopf));
    rep.equal("closed-form antipode equals solved antipode", d.hopf.s(), &d.antipode_solved);
    let parts = &d.legs;
    let mut n = Net::new();
    let x = n.inputs(parts);
    let e: Vec<Wire> = (0..3).map(|k| n.apply1(&d.embed[k], &[x[k]])).collect();
    let m1 = n.apply1(&d.hopf.mult, &[e[0], e[1]]);
    let m = n.apply1(&d.hopf.mult, &[m1, e[2]]);
    rep.equal("b·h·c is the basis monomial b⊗h⊗c", &n.eval(&[m]), &MultiMap::fuse(parts, d.space()));
    let algs = [(&d.pairing.b.mult, &d.pairing.b.unit), (&d.pairing.amb().h().mult, &d.pairing.amb().h().unit), (&d.pairing.c.mult, &d.pairing.c.unit)];
    for (k, name) in ["B", "H", "C"].iter().enumerate() {
        let i = &d.embed[k];
        rep.equal(format!("{name} embeds multiplicatively"), &algs[k].0.then(i), &i.tensor(i).then(&d.hopf.mult));
        rep.equal(format!("{name} embeds unitally"), &algs[k].1.then(i), &d.hopf.unit);
    }
    let (_, t) = d.chb_basis_change();
    rep.check("c·h·b monomials form a basis", linalg::inverse(&t).is_some(), None);
    if let Some(qt) = &d.r {
        rep.absorb("R-matrix: ", hopf::check_quasitriangular(qt));
    }
    rep
}

/// The classical double: Drin_k(cop-H, cop-H*) with ev(h, f) = f(h).
pub fn classical_pairing(h: &Bialgebra) -> Pairing {
    let dual = hopf::dual_hopf(h, &format!("{}*", h.space.name()));
    let c = BraidedBialgebra::from_hopf(&h.cop());
    let b = BraidedBialgebra::from_hopf(&dual.cop());
    let ev = MultiMap::from_fn(&[h.space.clone(), dual.space.clone()], &[], |d| if d[0] == d[1] { vec![(vec![], Scalar::one())] } else { vec![] });
    Pairing::new(c, b, ev)
}

pub fn classical_double(h: &Bialgebra) -> Result<DoubleAlgebra, DoubleError> {
    drinfeld_double(&classical_pairing(h))
}

/// Heis(C, B) = B ⋊ cop-C ⋊ H presented on the B⊗H⊗C basis.
pub fn heisenberg_double(p: &Pairing) -> Result<CrossProduct, DoubleError> {
    heisenberg_double_with_budget(p, DEFAULT_MAX_STEPS)
}

pub fn heisenberg_double_with_budget(p: &Pairing, budget: u64) -> Result<CrossProduct, DoubleError> {
    let h = p.amb().h().clone();
    let parts = bhc_parts(p);
    let space = Space::fused("Heis", &parts);
    let cross = heisenberg_cross_relation(p);
    let mut st = make_straightener(p, &cross, &[0, 2], budget);
    let mult = st.product_map(&space)?;
    let units = [p.b.unit.clone(), h.unit.clone(), p.c.unit.clone()];
    let embed = (0..3).map(|k| embedding(&parts, &space, k, &units)).collect();
    let unit = units[0].tensor(&units[1]).tensor(&units[2]).then(&MultiMap::fuse(&parts, &space));
    Ok(CrossProduct { algebra: Algebra { space, mult, unit }, legs: parts.to_vec(), embed, action: None })
}

/// Product of A⋊K for a left K-module algebra A in the ambient:
/// (m_A⊗m_K)(id⊗act⊗id⊗id)(id⊗id⊗Ψ_{K,A}⊗id)(id⊗Δ_K⊗id⊗id), legs (a, k, a′, k′).
fn cross_mult(amb: &Ambient, a_obj: &HModule, m_a: &MultiMap, k: &BraidedBialgebra, act: &MultiMap) -> MultiMap {
    let asp = &a_obj.legs[0];
    let mut n = Net::new();
    let x = n.inputs(&[asp.clone(), k.space().clone(), asp.clone(), k.space().clone()]);
    let d = n.apply(&k.comult, &[x[1]]);
    let (aw, kw) = amb.braid_wires(&mut n, &k.obj, a_obj, &[d[1]], &[x[2]]);
    let t = n.apply1(act, &[d[0], aw[0]]);
    let p = n.apply1(m_a, &[x[0], t]);
    let q = n.apply1(&k.mult, &[kw[0], x[3]]);
    n.eval(&[p, q])
}

/// Fuse a two-leg algebra (legs a, k) into one space.
fn fuse_two(name: &str, a: &Space, k: &Space, m: &MultiMap, ua: &MultiMap, uk: &MultiMap) -> (Algebra, MultiMap) {
    let parts = [a.clone(), k.clone()];
    let sp = Space::fused(name, &parts);
    let f = MultiMap::fuse(&parts, &sp);
    let s = MultiMap::split(&sp, &parts);
    let mult = s.tensor(&s).then(m).then(&f);
    let unit = ua.tensor(uk).then(&f);
    (Algebra { space: sp, mult, unit }, s)
}

/// Smash product A⋊K of a left K-module algebra.
pub fn smash_product(a: &AlgObject) -> Result<CrossProduct, DoubleError> {
    if a.kind != StructKind::LeftModule {
        return Err(DoubleError::Invalid("smash product needs a left module algebra".into()));
    }
    let k = &a.b;
    let m = cross_mult(&k.amb, &a.obj, &a.mult, k, &a.structure);
    let name = format!("{}#{}", a.space().name(), k.space().name());
    let (alg, split) = fuse_two(&name, a.space(), k.space(), &m, &a.unit, &k.unit);
    let parts = [a.space().clone(), k.space().clone()];
    let embed = vec![
        embedding(&parts, &alg.space, 0, &[a.unit.clone(), k.unit.clone()]),
        embedding(&parts, &alg.space, 1, &[a.unit.clone(), k.unit.clone()]),
    ];
    let obj = k.amb.tensor(&a.obj, &k.obj);
    let action = fused_action(&k.amb, &obj, &split, &alg.space);
    Ok(CrossProduct { algebra: alg, legs: parts.to_vec(), embed, action })
}

fn fused_action(amb: &Ambient, obj: &HModule, split: &MultiMap, sp: &Space) -> Option<MultiMap> {
    if amb.is_trivial() {
        return None;
    }
    let fuse = split.transpose();
    Some(MultiMap::identity(std::slice::from_ref(amb.hspace())).tensor(split).then(&obj.action).then(&fuse).relabel(&[amb.hspace().clone(), sp.clone()], std::slice::from_ref(sp)))
}

/// X ⋊ H for an algebra X in the ambient (H acting by `action`).
fn smash_with_h(amb: &Ambient, x: &Algebra, action: &MultiMap, name: &str) -> (Algebra, MultiMap) {
    let hb = h_as_braided(amb);
    let triv = Ambient::trivial();
    let xobj = HModule { legs: vec![x.space.clone()], action: triv.h().counit.tensor(&MultiMap::identity(std::slice::from_ref(&x.space))) };
    let m = cross_mult(&triv, &xobj, &x.mult, &hb, action);
    fuse_two(name, &x.space, hb.space(), &m, &x.unit, &hb.unit)
}

/// A ⋊ cop-C (⋊ H) for a left B-comodule algebra A, on the basis A⊗C(⊗H).
pub fn cross_product_comod(a: &AlgObject, p: &Pairing, with_h: bool) -> Result<CrossProduct, DoubleError> {
    if a.kind != StructKind::LeftComodule {
        return Err(DoubleError::Invalid("expected a left B-comodule algebra".into()));
    }
    let act = coaction_to_action(p, &a.obj, &a.structure, DualityVariant::BToCopC)?;
    let copc = p.c.cop();
    let m = cross_mult(&copc.amb, &a.obj, &a.mult, &copc, &act);
    let name = format!("{}#{}", a.space().name(), p.c.space().name());
    let (ac, split) = fuse_two(&name, a.space(), p.c.space(), &m, &a.unit, &p.c.unit);
    let amb = p.amb();
    let obj = amb.tensor(&a.obj, &p.c.obj);
    finish_with_h(amb, ac, split, &obj, &[a.space().clone(), p.c.space().clone()], &[a.unit.clone(), p.c.unit.clone()], with_h)
}

fn finish_with_h(amb: &Ambient, ac: Algebra, split: MultiMap, obj: &HModule, parts: &[Space], units: &[MultiMap], with_h: bool) -> Result<CrossProduct, DoubleError> {
    let action = MultiMap::identity(std::slice::from_ref(amb.hspace())).tensor(&split).then(&obj.action).then(&split.transpose()).relabel(&[amb.hspace().clone(), ac.space.clone()], std::slice::from_ref(&ac.space));
    if !with_h {
        let embed = (0..parts.len()).map(|k| embedding(parts, &ac.space, k, units)).collect();
        let action = (!amb.is_trivial()).then_some(action);
        return Ok(CrossProduct { algebra: ac, legs: parts.to_vec(), embed, action });
    }
    let name = format!("{}#{}", ac.space.name(), amb.hspace().name());
    let (alg, _) = smash_with_h(amb, &ac, &action, &name);
    // re-fuse the nested (AC)⊗H basis as A⊗C⊗H; row-major order agrees
    let mut all = parts.to_vec();
    all.push(amb.hspace().clone());
    let sp = Space::fused(&name, &all);
    let one = std::slice::from_ref(&sp);
    let algebra = Algebra { space: sp.clone(), mult: alg.mult.relabel(&[sp.clone(), sp.clone()], one), unit: alg.unit.relabel(&[], one) };
    let mut us = units.to_vec();
    us.push(amb.h().unit.clone());
    let embed = (0..all.len()).map(|k| embedding(&all, &sp, k, &us)).collect();
    Ok(CrossProduct { algebra, legs: all, embed, action: None })
}

/// A′ ⋊ B (⋊ H) for a right C-comodule algebra A′, with the B-action induced
/// through the pairing; basis A′⊗B(⊗H).
pub fn cross_product_right(a: &AlgObject, p: &Pairing, with_h: bool) -> Result<CrossProduct, DoubleError> {
    if a.kind != StructKind::RightComodule {
        return Err(DoubleError::Invalid("expected a right C-comodule algebra".into()));
    }
    let act = coaction_to_action(p, &a.obj, &a.structure, DualityVariant::InducedRight)?;
    let m = cross_mult(p.amb(), &a.obj, &a.mult, &p.b, &act);
    let name = format!("{}#{}", a.space().name(), p.b.space().name());
    let (ab, split) = fuse_two(&name, a.space(), p.b.space(), &m, &a.unit, &p.b.unit);
    let amb = p.amb();
    let obj = amb.tensor(&a.obj, &p.b.obj);
    finish_with_h(amb, ab, split, &obj, &[a.space().clone(), p.b.space().clone()], &[a.unit.clone(), p.b.unit.clone()], with_h)
}

/// Bosonization B⋊H of a braided Hopf algebra: Δ(b⊗h) = b₁⊗R⁽²⁾h₁ ⊗ R⁽¹⁾▷b₂⊗h₂.
pub fn bosonize(b: &BraidedBialgebra) -> Result<Bialgebra, DoubleError> {
    let amb = &b.amb;
    let h = amb.h();
    let hb = h_as_braided(amb);
    let triv = Ambient::trivial();
    let bobj = triv.trivial_module(std::slice::from_ref(b.space()));
    let m = cross_mult(&triv, &bobj, &b.mult, &hb, &b.obj.action);
    let parts = [b.space().clone(), h.space.clone()];
    let name = format!("{}#{}", b.space().name(), h.space.name());
    let (alg, split) = fuse_two(&name, b.space(), &h.space, &m, &b.unit, &h.unit);
    let sp = alg.space.clone();
    let fuse = MultiMap::fuse(&parts, &sp);
    let r = amb.r_matrix();
    let mut n = Net::new();
    let z = n.input(&sp);
    let s = n.apply(&split, &[z]);
    let db = n.apply(&b.comult, &[s[0]]);
    let dh = n.apply(&h.comult, &[s[1]]);
    let rr = n.apply(&r, &[]);
    let hh = n.apply1(&h.mult, &[rr[1], dh[0]]);
    let b2 = n.apply1(&b.obj.action, &[rr[0], db[1]]);
    let x = n.apply1(&fuse, &[db[0], hh]);
    let y = n.apply1(&fuse, &[b2, dh[1]]);
    let comult = n.eval(&[x, y]);
    let counit = split.then(&b.counit.tensor(&h.counit));
    Ok(Bialgebra::new(sp, alg.mult, alg.unit, comult, counit).into_hopf()?)
}

// ---------------------------------------------------------------------------
// modules and comodule algebras over the double

/// A left YD module over B as a module over the double:
/// (b·h·c)▷v = b▷(h▷(ev(c, v₋₁)v₀)).
pub fn yd_to_drin_module(v: &YDModule, d: &DoubleAlgebra) -> Result<MultiMap, DoubleError> {
    if v.side != Side::Left {
        return Err(DoubleError::Invalid("expected a left YD module".into()));
    }
    let p = &d.pairing;
    let mut n = Net::new();
    let z = n.input(d.space());
    let vi = n.inputs(v.legs());
    let s = n.apply(&MultiMap::split(d.space(), &d.legs), &[z]);
    let dv = n.apply(&v.coaction, &vi);
    n.apply(&p.ev, &[s[2], dv[0]]);
    let hv = n.apply(&v.obj.action, &cat(&[s[1]], &dv[1..]));
    let bv = n.apply(&v.action, &cat(&[s[0]], &hv));
    Ok(n.eval(&bv))
}

pub fn check_drin_module(d: &DoubleAlgebra, legs: &[Space], act: &MultiMap) -> Report {
    let mut rep = Report::new("module over the double");
    check_left_action_raw(&mut rep, "action", d.space(), &d.hopf.mult, &d.hopf.unit, legs, act);
    rep
}

/// Action of the double on V⊗W through its coproduct.
pub fn drin_tensor_action(d: &DoubleAlgebra, v: &[Space], av: &MultiMap, w: &[Space], aw: &MultiMap) -> MultiMap {
    let mut n = Net::new();
    let z = n.input(d.space());
    let vi = n.inputs(v);
    let wi = n.inputs(w);
    let dz = n.apply(&d.hopf.comult, &[z]);
    let vo = n.apply(av, &cat(&[dz[0]], &vi));
    let wo = n.apply(aw, &cat(&[dz[1]], &wi));
    n.eval(&cat(&vo, &wo))
}

/// Extend a coaction given on generators multiplicatively over a product
/// basis: δ(x₁x₂…) = δ(x₁)δ(x₂)… in D⊗X.
fn multiplicative_coaction(d: &DoubleAlgebra, x: &CrossProduct, gens: &[MultiMap]) -> MultiMap {
    let sp = x.space();
    let mut n = Net::new();
    let z = n.input(sp);
    let s = n.apply(&MultiMap::split(sp, &x.legs), &[z]);
    let mut acc: Option<(Wire, Wire)> = None;
    for (k, g) in gens.iter().enumerate() {
        let o = n.apply(g, &[s[k]]);
        acc = Some(match acc {
            None => (o[0], o[1]),
            Some((a, b)) => (n.apply1(&d.hopf.mult, &[a, o[0]]), n.apply1(&x.algebra.mult, &[b, o[1]])),
        });
    }
    let (a, b) = acc.expect("at least one generator");
    n.eval(&[a, b])
}

fn as_comodule_algebra(d: &DoubleAlgebra, x: CrossProduct, coaction: MultiMap) -> (CrossProduct, AlgObject) {
    let db = BraidedBialgebra::from_hopf(&d.hopf);
    let obj = db.amb.trivial_module(std::slice::from_ref(x.space()));
    let a = AlgObject { b: db, obj, mult: x.algebra.mult.clone(), unit: x.algebra.unit.clone(), structure: coaction, kind: StructKind::LeftComodule };
    (x, a)
}

/// A ⋊ cop-C ⋊ H as a left comodule algebra over the double, for a left
/// B-comodule algebra A: δ(a) = a⁽⁻¹⁾R⁽²⁾ ⊗ R⁽¹⁾▷a⁽⁰⁾, δ(c) = R⁻⁽¹⁾c₂ ⊗ R⁻⁽²⁾▷c₁, δ(h) = Δh.
pub fn drin_comod_algebra_left(a: &AlgObject, d: &DoubleAlgebra) -> Result<(CrossProduct, AlgObject), DoubleError> {
    let p = &d.pairing;
    let x = cross_product_comod(a, p, true)?;
    let amb = p.amb();
    let (r, ri) = (amb.r_matrix(), amb.r_matrix_inv());
    let (ib, ih) = (&d.embed[0], &d.embed[1]);
    let (xa, xc, xh) = (&x.embed[0], &x.embed[1], &x.embed[2]);

    let mut n = Net::new();
    let aw = n.input(a.space());
    let dl = n.apply(&a.structure, &[aw]);
    let rr = n.apply(&r, &[]);
    let u = n.apply1(ib, &[dl[0]]);
    let v = n.apply1(ih, &[rr[1]]);
    let dd = n.apply1(&d.hopf.mult, &[u, v]);
    let a2 = n.apply1(&a.obj.action, &[rr[0], dl[1]]);
    let xx = n.apply1(xa, &[a2]);
    let ga = n.eval(&[dd, xx]);

    let gc = coaction_on_c(p, d, xc, &ri);
    let gh = amb.h().comult.then(&ih.tensor(xh));
    let co = multiplicative_coaction(d, &x, &[ga, gc, gh]);
    Ok(as_comodule_algebra(d, x, co))
}

fn coaction_on_c(p: &Pairing, d: &DoubleAlgebra, xc: &MultiMap, ri: &MultiMap) -> MultiMap {
    let mut n = Net::new();
    let c = n.input(p.c.space());
    let dc = n.apply(&p.c.comult, &[c]);
    let q = n.apply(ri, &[]);
    let u = n.apply1(&d.embed[1], &[q[0]]);
    let v = n.apply1(&d.embed[2], &[dc[1]]);
    let dd = n.apply1(&d.hopf.mult, &[u, v]);
    let c1 = n.apply1(&p.c.obj.action, &[q[1], dc[0]]);
    let xx = n.apply1(xc, &[c1]);
    n.eval(&[dd, xx])
}

/// A′ ⋊ B ⋊ H as a left comodule algebra over the double, for a right
/// C-comodule algebra A′: δ(a) = R⁻⁽¹⁾a⁽¹⁾ ⊗ R⁻⁽²⁾▷a⁽⁰⁾, δ(b) = b₁R⁽²⁾ ⊗ R⁽¹⁾▷b₂, δ(h) = Δh.
pub fn drin_comod_algebra_right(a: &AlgObject, d: &DoubleAlgebra) -> Result<(CrossProduct, AlgObject), DoubleError> {
    let p = &d.pairing;
    let x = cross_product_right(a, p, true)?;
    let amb = p.amb();
    let (r, ri) = (amb.r_matrix(), amb.r_matrix_inv());
    let (ib, ih, ic) = (&d.embed[0], &d.embed[1], &d.embed[2]);
    let (xa, xb, xh) = (&x.embed[0], &x.embed[1], &x.embed[2]);

    let mut n = Net::new();
    let aw = n.input(a.space());
    let dl = n.apply(&a.structure, &[aw]);
    let q = n.apply(&ri, &[]);
    let u = n.apply1(ih, &[q[0]]);
    let v = n.apply1(ic, &[dl[1]]);
    let dd = n.apply1(&d.hopf.mult, &[u, v]);
    let a2 = n.apply1(&a.obj.action, &[q[1], dl[0]]);
    let xx = n.apply1(xa, &[a2]);
    let ga = n.eval(&[dd, xx]);

    let mut n = Net::new();
    let bw = n.input(p.b.space());
    let db = n.apply(&p.b.comult, &[bw]);
    let rr = n.apply(&r, &[]);
    let u = n.apply1(ib, &[db[0]]);
    let v = n.apply1(ih, &[rr[1]]);
    let dd = n.apply1(&d.hopf.mult, &[u, v]);
    let b2 = n.apply1(&p.b.obj.action, &[rr[0], db[1]]);
    let xx = n.apply1(xb, &[b2]);
    let gb = n.eval(&[dd, xx]);

    let gh = amb.h().comult.then(&ih.tensor(xh));
    let co = multiplicative_coaction(d, &x, &[ga, gb, gh]);
    Ok(as_comodule_algebra(d, x, co))
}

/// The two primitive commutator relations in the double for primitive
/// c ∈ C and b ∈ B (given as vectors).
pub fn check_primitive_commutators(d: &DoubleAlgebra, c: &MultiMap, b: &MultiMap) -> Report {
    let p = &d.pairing;
    let amb = p.amb();
    let h = amb.h();
    let (r, ri) = (amb.r_matrix(), amb.r_matrix_inv());
    let (ib, ih, ic) = (&d.embed[0], &d.embed[1], &d.embed[2]);
    let m = &d.hopf.mult;
    let one = d.hopf.unit.clone();
    let mut rep = Report::new("primitive commutators");

    // cb − (R⁻⁽¹⁾▷b)(R⁻⁽²⁾▷c)
    let lhs1 = {
        let cb = d.mul(&c.then(ic), &b.then(ib));
        let mut n = Net::new();
        let q = n.apply(&ri, &[]);
        let bw = n.apply1(b, &[]);
        let cw = n.apply1(c, &[]);
        let b2 = n.apply1(&p.b.obj.action, &[q[0], bw]);
        let c2 = n.apply1(&p.c.obj.action, &[q[1], cw]);
        let x = n.apply1(ib, &[b2]);
        let y = n.apply1(ic, &[c2]);
        let o = n.apply1(m, &[x, y]);
        cb.sub(&n.eval(&[o]))
    };
    let rhs1 = {
        let e = c.tensor(b).then(&p.ev);
        let mut n = Net::new();
        let q = n.apply(&ri, &[]);
        let rr = n.apply(&r, &[]);
        let bw = n.apply1(b, &[]);
        let cw = n.apply1(c, &[]);
        let hh = n.apply1(&h.mult, &[q[0], rr[1]]);
        let c2 = n.apply1(&p.c.obj.action, &[q[1], cw]);
        let b2 = n.apply1(&p.b.obj.action, &[rr[0], bw]);
        n.apply(&p.ev, &[c2, b2]);
        let o = n.apply1(ih, &[hh]);
        one.scale(&e.as_scalar()).sub(&n.eval(&[o]))
    };
    rep.equal("[c,b] with inverse braiding", &lhs1, &rhs1);

    // bc − (R⁽²⁾▷c)(R⁽¹⁾▷b)
    let lhs2 = {
        let bc = d.mul(&b.then(ib), &c.then(ic));
        let mut n = Net::new();
        let rr = n.apply(&r, &[]);
        let bw = n.apply1(b, &[]);
        let cw = n.apply1(c, &[]);
        let c2 = n.apply1(&p.c.obj.action, &[rr[1], cw]);
        let b2 = n.apply1(&p.b.obj.action, &[rr[0], bw]);
        let x = n.apply1(ic, &[c2]);
        let y = n.apply1(ib, &[b2]);
        let o = n.apply1(m, &[x, y]);
        bc.sub(&n.eval(&[o]))
    };
    let rhs2 = {
        let mut n = Net::new();
        let rr = n.apply(&r, &[]);
        let s = n.apply(&h.comult, &[rr[1]]);
        let q = n.apply(&ri, &[]);
        let hh = n.apply1(&h.mult, &[s[0], q[0]]);
        let k = n.apply1(&h.mult, &[q[1], s[1]]);
        let bw = n.apply1(b, &[]);
        let cw = n.apply1(c, &[]);
        let c2 = n.apply1(&p.c.obj.action, &[k, cw]);
        let b2 = n.apply1(&p.b.obj.action, &[rr[0], bw]);
        n.apply(&p.ev, &[c2, b2]);
        let o = n.apply1(ih, &[hh]);
        let first = n.eval(&[o]);
        let mut n = Net::new();
        let rr = n.apply(&r, &[]);
        let bw = n.apply1(b, &[]);
        let cw = n.apply1(c, &[]);
        let c2 = n.apply1(&p.c.obj.action, &[rr[1], cw]);
        let b2 = n.apply1(&p.b.obj.action, &[rr[0], bw]);
        n.apply(&p.ev, &[c2, b2]);
        let e = n.eval(&[]).as_scalar();
        first.sub(&one.scale(&e))
    };
    rep.equal("[b,c] with braiding", &lhs2, &rhs2);
    rep
}

/// Heisenberg relation for primitives: cb − (R⁻⁽¹⁾▷b)(R⁻⁽²⁾▷c) = ev(c, b).
pub fn check_heisenberg_commutator(p: &Pairing, heis: &CrossProduct, c: &MultiMap, b: &MultiMap) -> Report {
    let ri = p.amb().r_matrix_inv();
    let (ib, ic) = (&heis.embed[0], &heis.embed[2]);
    let mut rep = Report::new("Heisenberg commutator");
    let cb = heis.mul(&c.then(ic), &b.then(ib));
    let mut n = Net::new();
    let q = n.apply(&ri, &[]);
    let bw = n.apply1(b, &[]);
    let cw = n.apply1(c, &[]);
    let b2 = n.apply1(&p.b.obj.action, &[q[0], bw]);
    let c2 = n.apply1(&p.c.obj.action, &[q[1], cw]);
    let x = n.apply1(ib, &[b2]);
    let y = n.apply1(ic, &[c2]);
    let o = n.apply1(&heis.algebra.mult, &[x, y]);
    let lhs = cb.sub(&n.eval(&[o]));
    let rhs = heis.algebra.unit.scale(&c.tensor(b).then(&p.ev).as_scalar());
    rep.equal("[c,b] with inverse braiding = ev(c,b)", &lhs, &rhs);
    rep
}

/// Basis labels of a double element in B⊗H⊗C, for messages.
pub fn describe(d: &DoubleAlgebra, v: &MultiMap) -> String {
    let parts = &d.legs;
    let mut terms = Vec::new();
    for (c, _, s) in v.iter() {
        let m = unflatten(parts, c[0] as usize);
        terms.push(format!("({s})·{}·{}·{}", parts[0].label(m[0] as usize), parts[1].label(m[1] as usize), parts[2].label(m[2] as usize)));
    }
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
