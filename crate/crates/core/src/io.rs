//! JSON interchange documents (`hopf-forge/1`).
//!
//! A document lists named based spaces, named multilinear maps between
//! tensor products of them, and structures that refer to the maps by name.
//! Coefficients are strings in the syntax of [`parse_scalar`]. Saving is
//! canonical: maps keep their order of insertion, entries are sorted by
//! basis multi-index, so `load` followed by `save` reproduces a saved file
//! byte for byte.

use std::collections::{BTreeMap, HashMap};
use std::path::Path;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::braided::{Ambient, BraidedBialgebra, HModule};
use crate::cocycle::{self, Cocycle2};
use crate::double::{self, DoubleAlgebra, Pairing};
use crate::hopf::{self, Algebra, Bialgebra, DualQuasiTriangular, QuasiTriangular};
use crate::report::Report;
use crate::scalar::{parse_scalar, FieldSpec, Scalar};
use crate::tensor::{check_shape, MultiMap, Space};

pub const FORMAT: &str = "hopf-forge/1";

#[derive(Debug, thiserror::Error)]
pub enum IoError {
    #[error("{path}: {source}")]
    File { path: String, source: std::io::Error },
    #[error("malformed JSON at line {line}, column {column}: {msg}")]
    Syntax { line: usize, column: usize, msg: String },
    #[error("{pointer}: {msg}")]
    Invalid { pointer: String, msg: String },
    #[error("no structure named `{0}`")]
    Missing(String),
    #[error("{0}")]
    Build(String),
}

fn invalid(pointer: impl Into<String>, msg: impl Into<String>) -> IoError {
    IoError::Invalid { pointer: pointer.into(), msg: msg.into() }
}

/// A structure record. Map fields name entries of the document's `maps`,
/// structure fields name earlier structures.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case", deny_unknown_fields)]
pub enum Structure {
    Algebra {
        name: String,
        space: String,
        mult: String,
        unit: String,
    },
    Hopf {
        name: String,
        space: String,
        mult: String,
        unit: String,
        comult: String,
        counit: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        antipode: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        antipode_inv: Option<String>,
    },
    QuasiTriangular {
        name: String,
        hopf: String,
        r: String,
    },
    DualQuasiTriangular {
        name: String,
        hopf: String,
        r: String,
    },
    /// A bialgebra in the category of modules over a quasitriangular Hopf
    /// algebra; `inverse` selects the braiding built from R₂₁⁻¹.
    Braided {
        name: String,
        ambient: String,
        #[serde(default, skip_serializing_if = "is_false")]
        inverse: bool,
        space: String,
        action: String,
        mult: String,
        unit: String,
        comult: String,
        counit: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        antipode: Option<String>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        antipode_inv: Option<String>,
    },
    Pairing {
        name: String,
        c: String,
        b: String,
        ev: String,
    },
    /// The double of `pairing`; `hopf` holds its structure constants.
    Double {
        name: String,
        pairing: String,
        hopf: String,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        r: Option<String>,
    },
    Cocycle {
        name: String,
        over: String,
        sigma: String,
    },
}

fn is_false(b: &bool) -> bool {
    !*b
}

impl Structure {
    pub fn name(&self) -> &str {
        match self {
            Structure::Algebra { name, .. }
            | Structure::Hopf { name, .. }
            | Structure::QuasiTriangular { name, .. }
            | Structure::DualQuasiTriangular { name, .. }
            | Structure::Braided { name, .. }
            | Structure::Pairing { name, .. }
            | Structure::Double { name, .. }
            | Structure::Cocycle { name, .. } => name,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            Structure::Algebra { .. } => "algebra",
            Structure::Hopf { .. } => "hopf",
            Structure::QuasiTriangular { .. } => "quasi-triangular",
            Structure::DualQuasiTriangular { .. } => "dual-quasi-triangular",
            Structure::Braided { .. } => "braided",
            Structure::Pairing { .. } => "pairing",
            Structure::Double { .. } => "double",
            Structure::Cocycle { .. } => "cocycle",
        }
    }

    /// (field name, map name) for every map reference.
    fn map_refs(&self) -> Vec<(&'static str, &str)> {
        fn opt<'a>(v: &mut Vec<(&'static str, &'a str)>, k: &'static str, m: &'a Option<String>) {
            if let Some(m) = m {
                v.push((k, m.as_str()));
            }
        }
        let mut v = Vec::new();
        match self {
            Structure::Algebra { mult, unit, .. } => v.extend([("mult", mult.as_str()), ("unit", unit.as_str())]),
            Structure::Hopf { mult, unit, comult, counit, antipode, antipode_inv, .. } => {
                v.extend([("mult", mult.as_str()), ("unit", unit.as_str()), ("comult", comult.as_str()), ("counit", counit.as_str())]);
                opt(&mut v, "antipode", antipode);
                opt(&mut v, "antipode_inv", antipode_inv);
            }
            Structure::QuasiTriangular { r, .. } | Structure::DualQuasiTriangular { r, .. } => v.push(("r", r.as_str())),
            Structure::Braided { action, mult, unit, comult, counit, antipode, antipode_inv, .. } => {
                v.extend([("action", action.as_str()), ("mult", mult.as_str()), ("unit", unit.as_str()), ("comult", comult.as_str()), ("counit", counit.as_str())]);
                opt(&mut v, "antipode", antipode);
                opt(&mut v, "antipode_inv", antipode_inv);
            }
            Structure::Pairing { ev, .. } => v.push(("ev", ev.as_str())),
            Structure::Double { .. } => {}
            Structure::Cocycle { sigma, .. } => v.push(("sigma", sigma.as_str())),
        }
        v
    }

    /// (field name, structure name, accepted kinds) for every structure reference.
    fn struct_refs(&self) -> Vec<(&'static str, &str, &'static [&'static str])> {
        const BIALG: &[&str] = &["hopf", "braided"];
        match self {
            Structure::QuasiTriangular { hopf, .. } | Structure::DualQuasiTriangular { hopf, .. } => vec![("hopf", hopf.as_str(), &["hopf"])],
            Structure::Braided { ambient, .. } => vec![("ambient", ambient.as_str(), &["quasi-triangular"])],
            Structure::Pairing { c, b, .. } => vec![("c", c.as_str(), BIALG), ("b", b.as_str(), BIALG)],
            Structure::Double { pairing, hopf, r, .. } => {
                let mut v: Vec<(&'static str, &str, &'static [&'static str])> = vec![("pairing", pairing.as_str(), &["pairing"]), ("hopf", hopf.as_str(), &["hopf"])];
                if let Some(r) = r {
                    v.push(("r", r.as_str(), &["quasi-triangular"]));
                }
                v
            }
            Structure::Cocycle { over, .. } => vec![("over", over.as_str(), BIALG)],
            _ => Vec::new(),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpace {
    name: String,
    basis: Vec<String>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEntry {
    out: Vec<String>,
    #[serde(rename = "in")]
    inp: Vec<String>,
    value: String,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawMap {
    name: String,
    domain: Vec<String>,
    codomain: Vec<String>,
    entries: Vec<RawEntry>,
}

#[derive(Serialize)]
struct RawDoc<'a> {
    format: &'a str,
    field: String,
    spaces: Vec<RawSpace>,
    maps: Vec<RawMap>,
    structures: &'a [Structure],
    metadata: &'a BTreeMap<String, Value>,
}

/// An in-memory document.
#[derive(Clone, Debug)]
pub struct Document {
    field: FieldSpec,
    /// Set once a field is chosen explicitly or inferred from a cyclotomic
    /// or rational-function coefficient.
    field_fixed: bool,
    spaces: Vec<Space>,
    maps: Vec<(String, MultiMap)>,
    map_index: HashMap<String, usize>,
    pub structures: Vec<Structure>,
    pub metadata: BTreeMap<String, Value>,
}

impl Default for Document {
    fn default() -> Self {
        Document::new()
    }
}

impl Document {
    pub fn new() -> Document {
        Document {
            field: FieldSpec::Rationals,
            field_fixed: false,
            spaces: Vec::new(),
            maps: Vec::new(),
            map_index: HashMap::new(),
            structures: Vec::new(),
            metadata: BTreeMap::new(),
        }
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    /// Fix the coefficient field. Fails if a stored coefficient lies outside it.
    pub fn set_field(&mut self, field: FieldSpec) -> Result<(), IoError> {
        field.validate().map_err(|e| invalid("/field", e.to_string()))?;
        for (name, m) in &self.maps {
            if let Some((_, _, s)) = m.iter().find(|(_, _, s)| !field.contains(s)) {
                return Err(invalid("/field", format!("coefficient {} of map `{name}` is not in {field}", s.to_canonical_string(var_of(&field)))));
            }
        }
        self.field = field;
        self.field_fixed = true;
        Ok(())
    }

    pub fn spaces(&self) -> &[Space] {
        &self.spaces
    }

    pub fn map_names(&self) -> impl Iterator<Item = &str> {
        self.maps.iter().map(|(n, _)| n.as_str())
    }

    pub fn map(&self, name: &str) -> Result<&MultiMap, IoError> {
        self.map_index.get(name).map(|&i| &self.maps[i].1).ok_or_else(|| IoError::Build(format!("no map named `{name}`")))
    }

    pub fn structure(&self, name: &str) -> Result<&Structure, IoError> {
        self.structures.iter().find(|s| s.name() == name).ok_or_else(|| IoError::Missing(name.to_string()))
    }

    fn fresh_struct_name(&self, base: &str) -> String {
        let mut name = base.to_string();
        let mut k = 2;
        while self.structures.iter().any(|s| s.name() == name) {
            name = format!("{base}{k}");
            k += 1;
        }
        name
    }

    fn add_space(&mut self, s: &Space) -> Space {
        if let Some(t) = self.spaces.iter().find(|t| *t == s) {
            return t.clone();
        }
        let mut name = s.name().to_string();
        let mut k = 2;
        while self.spaces.iter().any(|t| t.name() == name) {
            name = format!("{}#{k}", s.name());
            k += 1;
        }
        let t = if name == s.name() { s.clone() } else { s.renamed(&name) };
        self.spaces.push(t.clone());
        t
    }

    fn absorb_field(&mut self, name: &str, m: &MultiMap) -> Result<(), IoError> {
        for (_, _, s) in m.iter() {
            if self.field.contains(s) {
                continue;
            }
            match s.cyc_order() {
                Some(n) if !self.field_fixed => {
                    self.field = FieldSpec::Cyclotomic(n);
                    self.field_fixed = true;
                }
                _ => {
                    return Err(IoError::Build(format!(
                        "map `{name}` has coefficient {} outside {}; fix the field first",
                        s.to_canonical_string(var_of(&self.field)),
                        self.field
                    )))
                }
            }
        }
        Ok(())
    }

    /// Store a map under `name` (or reuse an identical stored map) and
    /// return the name it is stored under.
    pub fn add_map(&mut self, name: &str, m: &MultiMap) -> Result<String, IoError> {
        if let Some(&i) = self.map_index.get(name) {
            let old = &self.maps[i].1;
            if old == m && spaces_match(old, m) {
                return Ok(name.to_string());
            }
            return Err(IoError::Build(format!("map `{name}` already stored with different content")));
        }
        self.absorb_field(name, m)?;
        let dom: Vec<Space> = m.domain().iter().map(|s| self.add_space(s)).collect();
        let cod: Vec<Space> = m.codomain().iter().map(|s| self.add_space(s)).collect();
        let m = m.relabel(&dom, &cod);
        self.map_index.insert(name.to_string(), self.maps.len());
        self.maps.push((name.to_string(), m));
        Ok(name.to_string())
    }

    fn push_structure(&mut self, s: Structure) -> Result<(), IoError> {
        if self.structures.iter().any(|t| t.name() == s.name()) {
            return Err(IoError::Build(format!("structure `{}` already present", s.name())));
        }
        self.structures.push(s);
        Ok(())
    }

    pub fn add_algebra(&mut self, name: &str, a: &Algebra) -> Result<(), IoError> {
        let space = self.add_space(&a.space).name().to_string();
        let mult = self.add_map(&format!("{name}.mult"), &a.mult)?;
        let unit = self.add_map(&format!("{name}.unit"), &a.unit)?;
        self.push_structure(Structure::Algebra { name: name.into(), space, mult, unit })
    }

    pub fn add_hopf(&mut self, name: &str, b: &Bialgebra) -> Result<(), IoError> {
        let space = self.add_space(&b.space).name().to_string();
        let mult = self.add_map(&format!("{name}.mult"), &b.mult)?;
        let unit = self.add_map(&format!("{name}.unit"), &b.unit)?;
        let comult = self.add_map(&format!("{name}.comult"), &b.comult)?;
        let counit = self.add_map(&format!("{name}.counit"), &b.counit)?;
        let antipode = b.antipode.as_ref().map(|s| self.add_map(&format!("{name}.antipode"), s)).transpose()?;
        let antipode_inv = b.antipode_inv.as_ref().map(|s| self.add_map(&format!("{name}.antipode_inv"), s)).transpose()?;
        self.push_structure(Structure::Hopf { name: name.into(), space, mult, unit, comult, counit, antipode, antipode_inv })
    }

    /// Name of a stored Hopf structure with the same structure maps as `b`.
    fn find_hopf(&self, b: &Bialgebra) -> Option<String> {
        self.structures.iter().find_map(|s| match s {
            Structure::Hopf { name, mult, unit, comult, counit, .. }
                if self.map(mult).ok() == Some(&b.mult)
                    && self.map(unit).ok() == Some(&b.unit)
                    && self.map(comult).ok() == Some(&b.comult)
                    && self.map(counit).ok() == Some(&b.counit)
                    && self.map(mult).map(|m| m.codomain()[0].labels() == b.space.labels()).unwrap_or(false) =>
            {
                Some(name.clone())
            }
            _ => None,
        })
    }

    fn ensure_hopf(&mut self, name: &str, b: &Bialgebra) -> Result<String, IoError> {
        if let Some(n) = self.find_hopf(b) {
            return Ok(n);
        }
        let name = self.fresh_struct_name(name);
        self.add_hopf(&name, b)?;
        Ok(name)
    }

    pub fn add_qt(&mut self, name: &str, qt: &QuasiTriangular) -> Result<(), IoError> {
        let hopf = self.ensure_hopf(&format!("{name}.H"), &qt.h)?;
        let r = self.add_map(&format!("{name}.r"), &qt.r)?;
        self.push_structure(Structure::QuasiTriangular { name: name.into(), hopf, r })
    }

    pub fn add_dual_qt(&mut self, name: &str, d: &DualQuasiTriangular) -> Result<(), IoError> {
        let hopf = self.ensure_hopf(&format!("{name}.H"), &d.h)?;
        let r = self.add_map(&format!("{name}.r"), &d.r)?;
        self.push_structure(Structure::DualQuasiTriangular { name: name.into(), hopf, r })
    }

    fn find_qt(&self, qt: &QuasiTriangular) -> Option<String> {
        self.structures.iter().find_map(|s| match s {
            Structure::QuasiTriangular { name, hopf, r } if self.map(r).ok() == Some(&qt.r) && self.find_hopf(&qt.h).as_deref() == Some(hopf.as_str()) => Some(name.clone()),
            _ => None,
        })
    }

    /// Store a braided bialgebra. Over the trivial category it is stored as
    /// an ordinary Hopf structure.
    pub fn add_braided(&mut self, name: &str, b: &BraidedBialgebra) -> Result<String, IoError> {
        if b.amb.is_trivial() {
            return self.ensure_hopf(name, &b.underlying());
        }
        if b.obj.legs.len() != 1 {
            return Err(IoError::Build(format!("`{name}` lives on {} tensor legs; only single-space objects are stored", b.obj.legs.len())));
        }
        let ambient = match self.find_qt(&b.amb.qt) {
            Some(n) => n,
            None => {
                let n = self.fresh_struct_name(&format!("{name}.ambient"));
                self.add_qt(&n, &b.amb.qt)?;
                n
            }
        };
        let name = self.fresh_struct_name(name);
        let space = self.add_space(b.space()).name().to_string();
        let action = self.add_map(&format!("{name}.action"), &b.obj.action)?;
        let mult = self.add_map(&format!("{name}.mult"), &b.mult)?;
        let unit = self.add_map(&format!("{name}.unit"), &b.unit)?;
        let comult = self.add_map(&format!("{name}.comult"), &b.comult)?;
        let counit = self.add_map(&format!("{name}.counit"), &b.counit)?;
        let antipode = b.antipode.as_ref().map(|s| self.add_map(&format!("{name}.antipode"), s)).transpose()?;
        let antipode_inv = b.antipode_inv.as_ref().map(|s| self.add_map(&format!("{name}.antipode_inv"), s)).transpose()?;
        self.push_structure(Structure::Braided { name: name.clone(), ambient, inverse: b.amb.inverse, space, action, mult, unit, comult, counit, antipode, antipode_inv })?;
        Ok(name)
    }

    pub fn add_pairing(&mut self, name: &str, p: &Pairing) -> Result<(), IoError> {
        let c = self.add_braided(&format!("{name}.C"), &p.c)?;
        let b = self.add_braided(&format!("{name}.B"), &p.b)?;
        let ev = self.add_map(&format!("{name}.ev"), &p.ev)?;
        self.push_structure(Structure::Pairing { name: name.into(), c, b, ev })
    }

    /// Store a double: its pairing under `{name}.P`, its Hopf structure
    /// under `{name}.H` and, when present, its R-matrix under `{name}.R`.
    pub fn add_double(&mut self, name: &str, d: &DoubleAlgebra) -> Result<(), IoError> {
        let pairing = format!("{name}.P");
        self.add_pairing(&pairing, &d.pairing)?;
        let hopf = format!("{name}.H");
        self.add_hopf(&hopf, &d.hopf)?;
        let r = match &d.r {
            Some(qt) => {
                let n = format!("{name}.R");
                let r = self.add_map(&format!("{n}.r"), &qt.r)?;
                self.push_structure(Structure::QuasiTriangular { name: n.clone(), hopf: hopf.clone(), r })?;
                Some(n)
            }
            None => None,
        };
        self.push_structure(Structure::Double { name: name.into(), pairing, hopf, r })
    }

    pub fn add_cocycle(&mut self, name: &str, s: &Cocycle2) -> Result<(), IoError> {
        let over = self.add_braided(&format!("{name}.over"), &s.over)?;
        let sigma = self.add_map(&format!("{name}.sigma"), &s.sigma)?;
        self.push_structure(Structure::Cocycle { name: name.into(), over, sigma })
    }

    /// As [`add_cocycle`](Self::add_cocycle) over an already stored structure.
    pub fn add_cocycle_over(&mut self, name: &str, over: &str, sigma: &MultiMap) -> Result<(), IoError> {
        self.structure(over)?;
        let sigma = self.add_map(&format!("{name}.sigma"), sigma)?;
        self.push_structure(Structure::Cocycle { name: name.into(), over: over.into(), sigma })
    }

    // --- resolution -------------------------------------------------------

    pub fn algebra(&self, name: &str) -> Result<Algebra, IoError> {
        match self.structure(name)? {
            Structure::Algebra { mult, unit, .. } => {
                let mult = self.map(mult)?.clone();
                Ok(Algebra { space: mult.codomain()[0].clone(), mult, unit: self.map(unit)?.clone() })
            }
            Structure::Hopf { .. } => {
                let h = self.hopf(name)?;
                Ok(Algebra { space: h.space, mult: h.mult, unit: h.unit })
            }
            s => Err(IoError::Build(format!("`{name}` is a {}, not an algebra", s.kind()))),
        }
    }

    pub fn hopf(&self, name: &str) -> Result<Bialgebra, IoError> {
        match self.structure(name)? {
            Structure::Hopf { mult, unit, comult, counit, antipode, antipode_inv, .. } => {
                let mult = self.map(mult)?.clone();
                let space = mult.codomain()[0].clone();
                let mut b = Bialgebra::new(space, mult, self.map(unit)?.clone(), self.map(comult)?.clone(), self.map(counit)?.clone());
                b.antipode = antipode.as_ref().map(|a| self.map(a).cloned()).transpose()?;
                b.antipode_inv = antipode_inv.as_ref().map(|a| self.map(a).cloned()).transpose()?;
                Ok(b)
            }
            s => Err(IoError::Build(format!("`{name}` is a {}, not a Hopf structure", s.kind()))),
        }
    }

    /// The quasitriangular structure; `None` when R is not invertible.
    pub fn qt(&self, name: &str) -> Result<Option<QuasiTriangular>, IoError> {
        match self.structure(name)? {
            Structure::QuasiTriangular { hopf, r, .. } => Ok(QuasiTriangular::new(self.hopf(hopf)?, self.map(r)?.clone())),
            s => Err(IoError::Build(format!("`{name}` is a {}, not quasitriangular", s.kind()))),
        }
    }

    pub fn braided(&self, name: &str) -> Result<BraidedBialgebra, IoError> {
        match self.structure(name)? {
            Structure::Hopf { .. } => Ok(BraidedBialgebra::from_hopf(&self.hopf(name)?)),
            Structure::Braided { ambient, inverse, action, mult, unit, comult, counit, antipode, antipode_inv, .. } => {
                let qt = self.qt(ambient)?.ok_or_else(|| IoError::Build(format!("R of `{ambient}` is not invertible")))?;
                let amb = Ambient { qt: Arc::new(qt), inverse: *inverse };
                let mult = self.map(mult)?.clone();
                let space = mult.codomain()[0].clone();
                Ok(BraidedBialgebra {
                    amb,
                    obj: HModule { legs: vec![space], action: self.map(action)?.clone() },
                    mult,
                    unit: self.map(unit)?.clone(),
                    comult: self.map(comult)?.clone(),
                    counit: self.map(counit)?.clone(),
                    antipode: antipode.as_ref().map(|a| self.map(a).cloned()).transpose()?,
                    antipode_inv: antipode_inv.as_ref().map(|a| self.map(a).cloned()).transpose()?,
                })
            }
            s => Err(IoError::Build(format!("`{name}` is a {}, not a bialgebra", s.kind()))),
        }
    }

    pub fn pairing(&self, name: &str) -> Result<Pairing, IoError> {
        match self.structure(name)? {
            Structure::Pairing { c, b, ev, .. } => {
                let mut c = self.braided(c)?;
                let mut b = self.braided(b)?;
                // both sides must share one ambient object for the category checks
                if !c.amb.is_trivial() {
                    b.amb = Ambient { qt: c.amb.qt.clone(), inverse: b.amb.inverse };
                } else if !b.amb.is_trivial() {
                    c.amb = Ambient { qt: b.amb.qt.clone(), inverse: c.amb.inverse };
                }
                Ok(Pairing::new(c, b, self.map(ev)?.clone()))
            }
            Structure::Double { pairing, .. } => self.pairing(pairing),
            s => Err(IoError::Build(format!("`{name}` is a {}, not a pairing", s.kind()))),
        }
    }

    /// Rebuild the double from its stored pairing.
    pub fn double(&self, name: &str, budget: u64) -> Result<DoubleAlgebra, IoError> {
        match self.structure(name)? {
            Structure::Double { pairing, .. } => {
                double::drinfeld_double_with_budget(&self.pairing(pairing)?, budget).map_err(|e| IoError::Build(format!("double `{name}`: {e}")))
            }
            s => Err(IoError::Build(format!("`{name}` is a {}, not a double", s.kind()))),
        }
    }

    pub fn cocycle(&self, name: &str) -> Result<Result<Cocycle2, cocycle::CocycleError>, IoError> {
        match self.structure(name)? {
            Structure::Cocycle { over, sigma, .. } => Ok(Cocycle2::new(&self.braided(over)?, self.map(sigma)?.clone())),
            s => Err(IoError::Build(format!("`{name}` is a {}, not a cocycle", s.kind()))),
        }
    }

    /// Verify the axioms of one structure.
    pub fn check(&self, name: &str, budget: u64) -> Result<Report, IoError> {
        let s = self.structure(name)?;
        let mut rep = match s {
            Structure::Algebra { .. } => hopf::check_algebra(&self.algebra(name)?),
            Structure::Hopf { antipode, .. } => {
                let h = self.hopf(name)?;
                if antipode.is_some() {
                    hopf::check_hopf(&h)
                } else {
                    hopf::check_bialgebra(&h)
                }
            }
            Structure::QuasiTriangular { .. } => match self.qt(name)? {
                Some(qt) => hopf::check_quasitriangular(&qt),
                None => failing(name, "R is invertible"),
            },
            Structure::DualQuasiTriangular { hopf: h, r, .. } => match DualQuasiTriangular::new(self.hopf(h)?, self.map(r)?.clone()) {
                Ok(d) => hopf::check_dual_quasitriangular(&d),
                Err(e) => failing(name, &format!("r is convolution invertible: {e}")),
            },
            Structure::Braided { .. } => crate::braided::check_braided_bialgebra(&self.braided(name)?),
            Structure::Pairing { .. } => double::check_pairing(&self.pairing(name)?),
            Structure::Double { hopf: h, r, .. } => {
                let d = self.double(name, budget)?;
                let mut rep = double::check_double(&d);
                let stored = self.hopf(h)?;
                rep.equal("stored product matches the rebuilt double", &stored.mult, &d.hopf.mult);
                rep.equal("stored coproduct matches the rebuilt double", &stored.comult, &d.hopf.comult);
                rep.equal("stored unit matches the rebuilt double", &stored.unit, &d.hopf.unit);
                rep.equal("stored counit matches the rebuilt double", &stored.counit, &d.hopf.counit);
                if let Some(r) = r {
                    match (self.qt(r)?, &d.r) {
                        (Some(a), Some(b)) => {
                            rep.equal("stored R matches the rebuilt double", &a.r, &b.r);
                        }
                        _ => {
                            rep.check("stored R matches the rebuilt double", false, Some("R missing or not invertible".into()));
                        }
                    }
                }
                rep
            }
            Structure::Cocycle { .. } => match self.cocycle(name)? {
                Ok(c) => cocycle::check_cocycle(&c),
                Err(e) => failing(name, &format!("σ is convolution invertible: {e}")),
            },
        };
        rep.subject = format!("{name} ({}): {}", s.kind(), rep.subject);
        Ok(rep)
    }

    // --- serialization ----------------------------------------------------

    /// Canonical pretty-printed JSON, newline terminated.
    pub fn to_json(&self) -> String {
        let var = var_of(&self.field);
        let spaces = self.spaces.iter().map(|s| RawSpace { name: s.name().to_string(), basis: s.labels().to_vec() }).collect();
        let maps = self
            .maps
            .iter()
            .map(|(name, m)| RawMap {
                name: name.clone(),
                domain: m.domain().iter().map(|s| s.name().to_string()).collect(),
                codomain: m.codomain().iter().map(|s| s.name().to_string()).collect(),
                entries: m
                    .iter()
                    .map(|(c, d, s)| RawEntry {
                        out: c.iter().zip(m.codomain()).map(|(&i, sp)| sp.label(i as usize).to_string()).collect(),
                        inp: d.iter().zip(m.domain()).map(|(&i, sp)| sp.label(i as usize).to_string()).collect(),
                        value: s.to_canonical_string(var),
                    })
                    .collect(),
            })
            .collect();
        let raw = RawDoc { format: FORMAT, field: self.field.to_string(), spaces, maps, structures: &self.structures, metadata: &self.metadata };
        let mut out = serde_json::to_string_pretty(&raw).expect("document serializes");
        out.push('\n');
        out
    }

    pub fn from_json(text: &str) -> Result<Document, IoError> {
        let v: Value = serde_json::from_str(text).map_err(|e| IoError::Syntax { line: e.line(), column: e.column(), msg: e.to_string() })?;
        let top = v.as_object().ok_or_else(|| invalid("", "document must be a JSON object"))?;
        for k in top.keys() {
            if !["format", "field", "spaces", "maps", "structures", "metadata"].contains(&k.as_str()) {
                return Err(invalid(format!("/{}", escape(k)), "unknown top-level key"));
            }
        }
        match top.get("format").and_then(Value::as_str) {
            Some(FORMAT) => {}
            Some(other) => return Err(invalid("/format", format!("unsupported format `{other}`, expected `{FORMAT}`"))),
            None => return Err(invalid("/format", format!("missing format string `{FORMAT}`"))),
        }
        let field: FieldSpec = top
            .get("field")
            .and_then(Value::as_str)
            .ok_or_else(|| invalid("/field", "missing field"))?
            .parse()
            .map_err(|e: crate::scalar::FieldError| invalid("/field", e.to_string()))?;
        field.validate().map_err(|e| invalid("/field", e.to_string()))?;

        let mut doc = Document::new();
        doc.field = field.clone();
        doc.field_fixed = true;

        let mut by_name: HashMap<String, Space> = HashMap::new();
        for (i, sv) in array(top.get("spaces"), "/spaces")?.iter().enumerate() {
            let ptr = format!("/spaces/{i}");
            let raw: RawSpace = typed(sv, &ptr)?;
            if raw.basis.is_empty() {
                return Err(invalid(format!("{ptr}/basis"), "a space needs at least one basis vector"));
            }
            let mut seen = std::collections::HashSet::new();
            for (j, l) in raw.basis.iter().enumerate() {
                if !seen.insert(l) {
                    return Err(invalid(format!("{ptr}/basis/{j}"), format!("duplicate basis label `{l}`")));
                }
            }
            if by_name.contains_key(&raw.name) {
                return Err(invalid(format!("{ptr}/name"), format!("duplicate space `{}`", raw.name)));
            }
            let s = Space::new(&raw.name, raw.basis);
            by_name.insert(raw.name, s.clone());
            doc.spaces.push(s);
        }

        for (i, mv) in array(top.get("maps"), "/maps")?.iter().enumerate() {
            let ptr = format!("/maps/{i}");
            let raw: RawMap = typed(mv, &ptr)?;
            if doc.map_index.contains_key(&raw.name) {
                return Err(invalid(format!("{ptr}/name"), format!("duplicate map `{}`", raw.name)));
            }
            let legs = |names: &[String], key: &str| -> Result<Vec<Space>, IoError> {
                names
                    .iter()
                    .enumerate()
                    .map(|(j, n)| by_name.get(n).cloned().ok_or_else(|| invalid(format!("{ptr}/{key}/{j}"), format!("unknown space `{n}`"))))
                    .collect()
            };
            let dom = legs(&raw.domain, "domain")?;
            let cod = legs(&raw.codomain, "codomain")?;
            let mut triples = Vec::with_capacity(raw.entries.len());
            let mut seen = std::collections::HashSet::new();
            for (k, e) in raw.entries.iter().enumerate() {
                let eptr = format!("{ptr}/entries/{k}");
                let idx = |labels: &[String], spaces: &[Space], key: &str| -> Result<Vec<u32>, IoError> {
                    if labels.len() != spaces.len() {
                        return Err(invalid(format!("{eptr}/{key}"), format!("expected {} basis labels, found {}", spaces.len(), labels.len())));
                    }
                    labels
                        .iter()
                        .zip(spaces)
                        .enumerate()
                        .map(|(j, (l, s))| {
                            s.index_of(l).map(|x| x as u32).ok_or_else(|| invalid(format!("{eptr}/{key}/{j}"), format!("`{l}` is not a basis label of `{}`", s.name())))
                        })
                        .collect()
                };
                let c = idx(&e.out, &cod, "out")?;
                let d = idx(&e.inp, &dom, "in")?;
                if !seen.insert((c.clone(), d.clone())) {
                    return Err(invalid(eptr, "repeated basis index"));
                }
                let s = parse_scalar(&e.value, &field).map_err(|err| invalid(format!("{eptr}/value"), err.to_string()))?;
                if !field.contains(&s) {
                    return Err(invalid(format!("{eptr}/value"), format!("coefficient not in {field}")));
                }
                triples.push((c, d, s));
            }
            doc.map_index.insert(raw.name.clone(), doc.maps.len());
            doc.maps.push((raw.name, MultiMap::from_triples(&dom, &cod, triples)));
        }

        if let Some(sv) = top.get("structures") {
            for (i, v) in array(Some(sv), "/structures")?.iter().enumerate() {
                let ptr = format!("/structures/{i}");
                let s: Structure = typed(v, &ptr)?;
                doc.validate_structure(&s, &ptr)?;
                doc.structures.push(s);
            }
        }
        if let Some(m) = top.get("metadata") {
            let obj = m.as_object().ok_or_else(|| invalid("/metadata", "metadata must be an object"))?;
            doc.metadata = obj.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        }
        Ok(doc)
    }

    fn validate_structure(&self, s: &Structure, ptr: &str) -> Result<(), IoError> {
        if self.structures.iter().any(|t| t.name() == s.name()) {
            return Err(invalid(format!("{ptr}/name"), format!("duplicate structure `{}`", s.name())));
        }
        for (key, m) in s.map_refs() {
            if !self.map_index.contains_key(m) {
                return Err(invalid(format!("{ptr}/{key}"), format!("unknown map `{m}`")));
            }
        }
        for (key, r, kinds) in s.struct_refs() {
            match self.structures.iter().find(|t| t.name() == r) {
                None => return Err(invalid(format!("{ptr}/{key}"), format!("unknown structure `{r}` (structures must be listed before use)"))),
                Some(t) if !kinds.contains(&t.kind()) => return Err(invalid(format!("{ptr}/{key}"), format!("`{r}` is a {}, expected {}", t.kind(), kinds.join(" or ")))),
                _ => {}
            }
        }
        let shape = |key: &str, m: &str, dom: &[Space], cod: &[Space]| -> Result<(), IoError> {
            let m = self.map(m)?;
            check_shape(dom, m.domain()).map_err(|e| invalid(format!("{ptr}/{key}"), format!("domain: {e}")))?;
            check_shape(cod, m.codomain()).map_err(|e| invalid(format!("{ptr}/{key}"), format!("codomain: {e}")))
        };
        let space = |key: &str, n: &str| -> Result<Space, IoError> {
            self.spaces.iter().find(|s| s.name() == n).cloned().ok_or_else(|| invalid(format!("{ptr}/{key}"), format!("unknown space `{n}`")))
        };
        let bialgebra_shapes = |sp: &Space, mult: &str, unit: &str, comult: &str, counit: &str, antipode: &Option<String>, antipode_inv: &Option<String>| -> Result<(), IoError> {
            let one = std::slice::from_ref(sp);
            let two = [sp.clone(), sp.clone()];
            shape("mult", mult, &two, one)?;
            shape("unit", unit, &[], one)?;
            shape("comult", comult, one, &two)?;
            shape("counit", counit, one, &[])?;
            if let Some(a) = antipode {
                shape("antipode", a, one, one)?;
            }
            if let Some(a) = antipode_inv {
                shape("antipode_inv", a, one, one)?;
            }
            Ok(())
        };
        let hopf_space = |n: &str| -> Result<Space, IoError> { Ok(self.hopf(n)?.space) };
        match s {
            Structure::Algebra { space: sp, mult, unit, .. } => {
                let sp = space("space", sp)?;
                shape("mult", mult, &[sp.clone(), sp.clone()], std::slice::from_ref(&sp))?;
                shape("unit", unit, &[], std::slice::from_ref(&sp))?;
            }
            Structure::Hopf { space: sp, mult, unit, comult, counit, antipode, antipode_inv, .. } => {
                let sp = space("space", sp)?;
                bialgebra_shapes(&sp, mult, unit, comult, counit, antipode, antipode_inv)?;
            }
            Structure::QuasiTriangular { hopf: h, r, .. } => {
                let hs = hopf_space(h)?;
                shape("r", r, &[], &[hs.clone(), hs])?;
            }
            Structure::DualQuasiTriangular { hopf: h, r, .. } => {
                let hs = hopf_space(h)?;
                shape("r", r, &[hs.clone(), hs], &[])?;
            }
            Structure::Braided { ambient, space: sp, action, mult, unit, comult, counit, antipode, antipode_inv, .. } => {
                let sp = space("space", sp)?;
                let hs = match self.structure(ambient)? {
                    Structure::QuasiTriangular { hopf: h, .. } => hopf_space(h)?,
                    _ => unreachable!("kind checked above"),
                };
                shape("action", action, &[hs, sp.clone()], std::slice::from_ref(&sp))?;
                bialgebra_shapes(&sp, mult, unit, comult, counit, antipode, antipode_inv)?;
            }
            Structure::Pairing { c, b, ev, .. } => {
                let cs = self.braided(c)?.space().clone();
                let bs = self.braided(b)?.space().clone();
                shape("ev", ev, &[cs, bs], &[])?;
            }
            Structure::Double { .. } => {}
            Structure::Cocycle { over, sigma, .. } => {
                let sp = self.braided(over)?.space().clone();
                shape("sigma", sigma, &[sp.clone(), sp], &[])?;
            }
        }
        Ok(())
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Document, IoError> {
        let p = path.as_ref();
        let text = std::fs::read_to_string(p).map_err(|e| IoError::File { path: p.display().to_string(), source: e })?;
        Document::from_json(&text)
    }

    pub fn save(&self, path: impl AsRef<Path>) -> Result<(), IoError> {
        let p = path.as_ref();
        std::fs::write(p, self.to_json()).map_err(|e| IoError::File { path: p.display().to_string(), source: e })
    }
}

/// A document holding one catalog entry under `name`.
pub fn entry_document(name: &str, e: &crate::catalog::Entry) -> Result<Document, IoError> {
    use crate::catalog::Entry;
    let mut doc = Document::new();
    match e {
        Entry::Hopf(h) => doc.add_hopf(name, h)?,
        Entry::QuasiTriangular(q) => doc.add_qt(name, q)?,
        Entry::Braided(b) => {
            doc.add_braided(name, b)?;
        }
        Entry::Pairing(p) => doc.add_pairing(name, p)?,
        Entry::Double(d) => doc.add_double(name, d)?,
        Entry::DualQuasiTriangular(d) => doc.add_dual_qt(name, d)?,
        Entry::Cocycle(c) => doc.add_cocycle(name, c)?,
    }
    Ok(doc)
}

fn failing(name: &str, what: &str) -> Report {
    let mut r = Report::new(name.to_string());
    r.check(what, false, None);
    r
}

fn spaces_match(a: &MultiMap, b: &MultiMap) -> bool {
    a.domain().iter().zip(b.domain()).all(|(x, y)| x.labels() == y.labels()) && a.codomain().iter().zip(b.codomain()).all(|(x, y)| x.labels() == y.labels())
}

fn var_of(f: &FieldSpec) -> &str {
    match f {
        FieldSpec::RationalFunctions { var, .. } => var,
        _ => "q",
    }
}

/// JSON-pointer token escaping.
fn escape(k: &str) -> String {
    k.replace('~', "~0").replace('/', "~1")
}

fn array<'a>(v: Option<&'a Value>, ptr: &str) -> Result<&'a Vec<Value>, IoError> {
    v.ok_or_else(|| invalid(ptr, "missing"))?.as_array().ok_or_else(|| invalid(ptr, "expected an array"))
}

fn typed<T: serde::de::DeserializeOwned>(v: &Value, ptr: &str) -> Result<T, IoError> {
    T::deserialize(v).map_err(|e| invalid(ptr, e.to_string()))
}

/// Parse a coefficient in the document's field (used by the command line).
pub fn scalar_in(doc: &Document, text: &str) -> Result<Scalar, IoError> {
    parse_scalar(text, doc.field()).map_err(|e| IoError::Build(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn hopf_round_trip_is_byte_identical() {
        let mut doc = Document::new();
        doc.add_hopf("T", &catalog::taft(3).unwrap()).unwrap();
        doc.metadata.insert("source".into(), Value::String("test".into()));
        assert_eq!(doc.field(), &FieldSpec::Cyclotomic(3));
        let text = doc.to_json();
        let again = Document::from_json(&text).unwrap();
        assert_eq!(again.to_json(), text);
        let h = again.hopf("T").unwrap();
        assert_eq!(h.mult, catalog::taft(3).unwrap().mult);
        assert!(again.check("T", 1000).unwrap().passed());
    }

    #[test]
    fn braided_and_pairing_round_trip() {
        let mut doc = Document::new();
        doc.add_pairing("P", &catalog::braided_line_pairing(3).unwrap()).unwrap();
        let text = doc.to_json();
        let again = Document::from_json(&text).unwrap();
        assert_eq!(again.to_json(), text);
        assert!(again.check("P", 1000).unwrap().passed());
        let p = again.pairing("P").unwrap();
        assert!(!p.c.amb.is_trivial());
    }

    #[test]
    fn errors_carry_pointers() {
        let mut doc = Document::new();
        doc.add_hopf("H", &catalog::group_algebra(&catalog::Group::cyclic(2))).unwrap();
        let text = doc.to_json();
        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["maps"][0]["entries"][1]["in"][0] = Value::String("nope".into());
        match Document::from_json(&v.to_string()) {
            Err(IoError::Invalid { pointer, .. }) => assert_eq!(pointer, "/maps/0/entries/1/in/0"),
            other => panic!("unexpected {other:?}"),
        }
        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["structures"][0]["comult"] = Value::String("H.mult".into());
        match Document::from_json(&v.to_string()) {
            Err(IoError::Invalid { pointer, .. }) => assert_eq!(pointer, "/structures/0/comult"),
            other => panic!("unexpected {other:?}"),
        }
        assert!(matches!(Document::from_json("{\"format\": "), Err(IoError::Syntax { .. })));
        let mut v: Value = serde_json::from_str(&text).unwrap();
        v["maps"][0]["entries"][0]["value"] = Value::String("z".into());
        assert!(matches!(Document::from_json(&v.to_string()), Err(IoError::Invalid { .. })));
    }

    #[test]
    fn mixed_orders_are_rejected() {
        let mut doc = Document::new();
        doc.add_hopf("T3", &catalog::taft(3).unwrap()).unwrap();
        assert!(doc.add_hopf("T4", &catalog::taft(4).unwrap()).is_err());
    }
}
