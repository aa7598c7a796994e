//! Based vector spaces and sparse multilinear maps between tensor products
//! of them.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use crate::scalar::Scalar;

#[derive(Debug, PartialEq, Eq, Hash)]
struct SpaceInner {
    name: String,
    labels: Vec<String>,
}

/// A finite-dimensional vector space with a named basis.
#[derive(Clone, Debug, Eq, Hash)]
pub struct Space(Arc<SpaceInner>);

impl PartialEq for Space {
    fn eq(&self, o: &Space) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || self.0 == o.0
    }
}

impl Space {
    pub fn new(name: &str, labels: Vec<String>) -> Space {
        assert!(!labels.is_empty(), "space `{name}` must have positive dimension");
        debug_assert!(
            {
                let mut l = labels.clone();
                l.sort();
                l.dedup();
                l.len() == labels.len()
            },
            "basis labels of `{name}` must be distinct"
        );
        Space(Arc::new(SpaceInner { name: name.to_string(), labels }))
    }

    /// Space with labels `prefix0`, `prefix1`, …
    pub fn numbered(name: &str, prefix: &str, dim: usize) -> Space {
        Space::new(name, (0..dim).map(|i| format!("{prefix}{i}")).collect())
    }

    pub fn name(&self) -> &str {
        &self.0.name
    }

    pub fn dim(&self) -> usize {
        self.0.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.0.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.0.labels[i]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.0.labels.iter().position(|l| l == label)
    }

    pub fn renamed(&self, name: &str) -> Space {
        Space::new(name, self.0.labels.clone())
    }

    /// One space whose basis is the row-major product basis of `parts`.
    pub fn fused(name: &str, parts: &[Space]) -> Space {
        let mut labels = vec![String::new()];
        for (k, p) in parts.iter().enumerate() {
            let mut next = Vec::with_capacity(labels.len() * p.dim());
            for l in &labels {
                for m in p.labels() {
                    next.push(if k == 0 { m.clone() } else { format!("{l}|{m}") });
                }
            }
            labels = next;
        }
        if parts.is_empty() {
            labels = vec!["1".into()];
        }
        Space::new(name, labels)
    }
}

pub fn total_dim(spaces: &[Space]) -> usize {
    spaces.iter().map(|s| s.dim()).product()
}

/// Row-major multi-index of a flat index.
pub fn unflatten(spaces: &[Space], mut i: usize) -> Vec<u32> {
    let mut out = vec![0u32; spaces.len()];
    for k in (0..spaces.len()).rev() {
        let d = spaces[k].dim();
        out[k] = (i % d) as u32;
        i /= d;
    }
    out
}

pub fn flatten(spaces: &[Space], idx: &[u32]) -> usize {
    let mut i = 0usize;
    for (s, &x) in spaces.iter().zip(idx) {
        i = i * s.dim() + x as usize;
    }
    i
}

/// All multi-indices of a list of spaces, in row-major order.
pub fn multi_indices(spaces: &[Space]) -> impl Iterator<Item = Vec<u32>> + '_ {
    (0..total_dim(spaces)).map(move |i| unflatten(spaces, i))
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ShapeError {
    #[error("shape mismatch: expected [{expected}], found [{found}]")]
    Mismatch { expected: String, found: String },
}

fn names(s: &[Space]) -> String {
    s.iter().map(|x| x.name().to_string()).collect::<Vec<_>>().join(", ")
}

pub fn check_shape(expected: &[Space], found: &[Space]) -> Result<(), ShapeError> {
    if expected.len() != found.len() || expected.iter().zip(found).any(|(a, b)| a.dim() != b.dim()) {
        return Err(ShapeError::Mismatch { expected: names(expected), found: names(found) });
    }
    Ok(())
}

/// A sparse linear map ⊗domain → ⊗codomain. Entries are keyed by the
/// codomain multi-index followed by the domain multi-index; zeros are never
/// stored. An empty domain is the unit object, so maps ∅ → V are vectors and
/// maps V → ∅ are functionals.
#[derive(Clone, Debug)]
pub struct MultiMap {
    domain: Vec<Space>,
    codomain: Vec<Space>,
    entries: Arc<BTreeMap<Vec<u32>, Scalar>>,
}

impl PartialEq for MultiMap {
    /// Equal when the leg dimensions agree and the entries agree.
    fn eq(&self, o: &MultiMap) -> bool {
        check_shape(&self.domain, &o.domain).is_ok()
            && check_shape(&self.codomain, &o.codomain).is_ok()
            && (Arc::ptr_eq(&self.entries, &o.entries) || self.entries == o.entries)
    }
}

impl MultiMap {
    pub fn zero(domain: &[Space], codomain: &[Space]) -> MultiMap {
        MultiMap { domain: domain.to_vec(), codomain: codomain.to_vec(), entries: Arc::new(BTreeMap::new()) }
    }

    /// Build from (codomain index, domain index, coefficient) triples,
    /// summing repeats and dropping zeros.
    pub fn from_triples<I>(domain: &[Space], codomain: &[Space], triples: I) -> MultiMap
    where
        I: IntoIterator<Item = (Vec<u32>, Vec<u32>, Scalar)>,
    {
        let mut m: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (c, d, s) in triples {
            debug_assert_eq!(c.len(), codomain.len());
            debug_assert_eq!(d.len(), domain.len());
            let mut k = c;
            k.extend_from_slice(&d);
            accumulate(&mut m, k, &s);
        }
        m.retain(|_, v| !v.is_zero());
        MultiMap { domain: domain.to_vec(), codomain: codomain.to_vec(), entries: Arc::new(m) }
    }

    /// Build from full keys (codomain ++ domain), summing repeats.
    pub fn from_keys<I>(domain: &[Space], codomain: &[Space], items: I) -> MultiMap
    where
        I: IntoIterator<Item = (Vec<u32>, Scalar)>,
    {
        let mut m: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (k, s) in items {
            debug_assert_eq!(k.len(), codomain.len() + domain.len());
            accumulate(&mut m, k, &s);
        }
        m.retain(|_, v| !v.is_zero());
        MultiMap { domain: domain.to_vec(), codomain: codomain.to_vec(), entries: Arc::new(m) }
    }

    /// Build by evaluating a function on every domain basis multi-index.
    pub fn from_fn<F>(domain: &[Space], codomain: &[Space], mut f: F) -> MultiMap
    where
        F: FnMut(&[u32]) -> Vec<(Vec<u32>, Scalar)>,
    {
        let mut triples = Vec::new();
        for d in multi_indices(domain) {
            for (c, s) in f(&d) {
                triples.push((c, d.clone(), s));
            }
        }
        MultiMap::from_triples(domain, codomain, triples)
    }

    pub fn identity(spaces: &[Space]) -> MultiMap {
        MultiMap::from_fn(spaces, spaces, |d| vec![(d.to_vec(), Scalar::one())])
    }

    /// The scalar `s` as a map ∅ → ∅.
    pub fn scalar(s: Scalar) -> MultiMap {
        MultiMap::from_keys(&[], &[], vec![(vec![], s)])
    }

    /// A vector in ⊗spaces, given as a map from the unit object.
    pub fn vector(spaces: &[Space], coords: Vec<(Vec<u32>, Scalar)>) -> MultiMap {
        MultiMap::from_keys(&[], spaces, coords)
    }

    /// The basis vector with multi-index `idx`.
    pub fn basis_vector(spaces: &[Space], idx: &[u32]) -> MultiMap {
        MultiMap::vector(spaces, vec![(idx.to_vec(), Scalar::one())])
    }

    /// The coefficient-one transposition V⊗W → W⊗V.
    pub fn flip(v: &Space, w: &Space) -> MultiMap {
        MultiMap::from_fn(&[v.clone(), w.clone()], &[w.clone(), v.clone()], |d| vec![(vec![d[1], d[0]], Scalar::one())])
    }

    /// Permutation of tensor legs: output leg k is input leg `perm[k]`.
    pub fn permutation(spaces: &[Space], perm: &[usize]) -> MultiMap {
        let cod: Vec<Space> = perm.iter().map(|&p| spaces[p].clone()).collect();
        MultiMap::from_fn(spaces, &cod, |d| vec![(perm.iter().map(|&p| d[p]).collect(), Scalar::one())])
    }

    /// The reindexing ⊗parts → fused (row-major), as an isomorphism.
    pub fn fuse(parts: &[Space], fused: &Space) -> MultiMap {
        assert_eq!(total_dim(parts), fused.dim());
        MultiMap::from_fn(parts, std::slice::from_ref(fused), |d| vec![(vec![flatten(parts, d) as u32], Scalar::one())])
    }

    /// The inverse of `fuse`.
    pub fn split(fused: &Space, parts: &[Space]) -> MultiMap {
        MultiMap::fuse(parts, fused).transpose()
    }

    pub fn domain(&self) -> &[Space] {
        &self.domain
    }

    pub fn codomain(&self) -> &[Space] {
        &self.codomain
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Iterate over (codomain index, domain index, coefficient).
    pub fn iter(&self) -> impl Iterator<Item = (&[u32], &[u32], &Scalar)> {
        let k = self.codomain.len();
        self.entries.iter().map(move |(key, v)| (&key[..k], &key[k..], v))
    }

    pub fn entries(&self) -> &BTreeMap<Vec<u32>, Scalar> {
        &self.entries
    }

    pub fn get(&self, cod: &[u32], dom: &[u32]) -> Scalar {
        let mut k = cod.to_vec();
        k.extend_from_slice(dom);
        self.entries.get(&k).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Value of a map from the unit object to the unit object.
    pub fn as_scalar(&self) -> Scalar {
        assert!(self.domain.is_empty() && self.codomain.is_empty());
        self.entries.get(&Vec::new()).cloned().unwrap_or_else(Scalar::zero)
    }

    /// Entries grouped by domain index (the images of basis vectors).
    pub fn columns(&self) -> HashMap<Vec<u32>, Vec<(Vec<u32>, Scalar)>> {
        let mut out: HashMap<Vec<u32>, Vec<(Vec<u32>, Scalar)>> = HashMap::new();
        for (c, d, s) in self.iter() {
            out.entry(d.to_vec()).or_default().push((c.to_vec(), s.clone()));
        }
        out
    }

    /// Image of one basis multi-index.
    pub fn column(&self, dom: &[u32]) -> Vec<(Vec<u32>, Scalar)> {
        self.iter().filter(|(_, d, _)| *d == dom).map(|(c, _, s)| (c.to_vec(), s.clone())).collect()
    }

    /// Same entries, new leg spaces of equal dimensions.
    pub fn relabel(&self, domain: &[Space], codomain: &[Space]) -> MultiMap {
        check_shape(&self.domain, domain).expect("relabel domain");
        check_shape(&self.codomain, codomain).expect("relabel codomain");
        MultiMap { domain: domain.to_vec(), codomain: codomain.to_vec(), entries: self.entries.clone() }
    }

    pub fn transpose(&self) -> MultiMap {
        let k = self.codomain.len();
        MultiMap::from_keys(
            &self.codomain,
            &self.domain,
            self.entries.iter().map(|(key, v)| {
                let mut nk = key[k..].to_vec();
                nk.extend_from_slice(&key[..k]);
                (nk, v.clone())
            }),
        )
    }

    pub fn scale(&self, s: &Scalar) -> MultiMap {
        MultiMap::from_keys(&self.domain, &self.codomain, self.entries.iter().map(|(k, v)| (k.clone(), v * s)))
    }

    pub fn add(&self, o: &MultiMap) -> MultiMap {
        check_shape(&self.domain, &o.domain).expect("add domain");
        check_shape(&self.codomain, &o.codomain).expect("add codomain");
        let mut m = (*self.entries).clone();
        for (k, v) in o.entries.iter() {
            accumulate(&mut m, k.clone(), v);
        }
        m.retain(|_, v| !v.is_zero());
        MultiMap { domain: self.domain.clone(), codomain: self.codomain.clone(), entries: Arc::new(m) }
    }

    pub fn sub(&self, o: &MultiMap) -> MultiMap {
        self.add(&o.scale(&Scalar::from_int(-1)))
    }

    /// f∘g, contracting the codomain of g against the domain of f leg by leg.
    pub fn compose(&self, g: &MultiMap) -> Result<MultiMap, ShapeError> {
        check_shape(&self.domain, &g.codomain)?;
        let gk = g.codomain.len();
        let mut by_cod: HashMap<&[u32], Vec<(&[u32], &Scalar)>> = HashMap::new();
        for (key, v) in g.entries.iter() {
            by_cod.entry(&key[..gk]).or_default().push((&key[gk..], v));
        }
        let fk = self.codomain.len();
        let mut m: BTreeMap<Vec<u32>, Scalar> = BTreeMap::new();
        for (key, v) in self.entries.iter() {
            if let Some(list) = by_cod.get(&key[fk..]) {
                for (gd, gv) in list {
                    let mut nk = key[..fk].to_vec();
                    nk.extend_from_slice(gd);
                    accumulate(&mut m, nk, &(v * *gv));
                }
            }
        }
        m.retain(|_, v| !v.is_zero());
        Ok(MultiMap { domain: g.domain.clone(), codomain: self.codomain.clone(), entries: Arc::new(m) })
    }

    /// Composition that panics on shape mismatch; for internal use where
    /// shapes are guaranteed by construction.
    pub fn then(&self, f: &MultiMap) -> MultiMap {
        f.compose(self).expect("composition shapes")
    }

    pub fn tensor(&self, g: &MultiMap) -> MultiMap {
        let fk = self.codomain.len();
        let gk = g.codomain.len();
        let mut m = BTreeMap::new();
        for (a, x) in self.entries.iter() {
            for (b, y) in g.entries.iter() {
                let mut k = Vec::with_capacity(a.len() + b.len());
                k.extend_from_slice(&a[..fk]);
                k.extend_from_slice(&b[..gk]);
                k.extend_from_slice(&a[fk..]);
                k.extend_from_slice(&b[gk..]);
                m.insert(k, x * y);
            }
        }
        let mut dom = self.domain.clone();
        dom.extend_from_slice(&g.domain);
        let mut cod = self.codomain.clone();
        cod.extend_from_slice(&g.codomain);
        MultiMap { domain: dom, codomain: cod, entries: Arc::new(m) }
    }

    /// First key (codomain ++ domain, lexicographic) where the maps differ.
    pub fn first_difference(&self, o: &MultiMap) -> Option<(Vec<u32>, Scalar, Scalar)> {
        let mut a = self.entries.iter().peekable();
        let mut b = o.entries.iter().peekable();
        loop {
            match (a.peek(), b.peek()) {
                (None, None) => return None,
                (Some((ka, va)), None) => return Some(((*ka).clone(), (*va).clone(), Scalar::zero())),
                (None, Some((kb, vb))) => return Some(((*kb).clone(), Scalar::zero(), (*vb).clone())),
                (Some((ka, va)), Some((kb, vb))) => match ka.cmp(kb) {
                    std::cmp::Ordering::Less => return Some(((*ka).clone(), (*va).clone(), Scalar::zero())),
                    std::cmp::Ordering::Greater => return Some(((*kb).clone(), Scalar::zero(), (*vb).clone())),
                    std::cmp::Ordering::Equal => {
                        if va != vb {
                            return Some(((*ka).clone(), (*va).clone(), (*vb).clone()));
                        }
                        a.next();
                        b.next();
                    }
                },
            }
        }
    }

    /// Human-readable form of a key, e.g. `[x1, g] <- [g, x0]`.
    pub fn describe_key(&self, key: &[u32]) -> String {
        let k = self.codomain.len();
        let lab = |sp: &[Space], ix: &[u32]| sp.iter().zip(ix).map(|(s, &i)| s.label(i as usize).to_string()).collect::<Vec<_>>().join(", ");
        format!("[{}] <- [{}]", lab(&self.codomain, &key[..k]), lab(&self.domain, &key[k..]))
    }

    /// Matrix view: rows = flattened codomain, columns = flattened domain.
    pub fn to_dense(&self) -> Vec<Vec<Scalar>> {
        let r = total_dim(&self.codomain);
        let c = total_dim(&self.domain);
        let mut out = vec![vec![Scalar::zero(); c]; r];
        for (cod, dom, v) in self.iter() {
            out[flatten(&self.codomain, cod)][flatten(&self.domain, dom)] = v.clone();
        }
        out
    }
}

pub(crate) fn accumulate(m: &mut BTreeMap<Vec<u32>, Scalar>, k: Vec<u32>, s: &Scalar) {
    if s.is_zero() {
        return;
    }
    match m.get_mut(&k) {
        Some(v) => *v += s,
        None => {
            m.insert(k, s.clone());
        }
    }
}

impl fmt::Display for MultiMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}] -> [{}]", names(&self.domain), names(&self.codomain))?;
        for (k, v) in self.entries.iter() {
            writeln!(f, "  {} : {}", self.describe_key(k), v)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: &str, d: usize) -> Space {
        Space::numbered(n, n, d)
    }

    #[test]
    fn flip_twice_is_identity() {
        let v = sp("v", 2);
        let w = sp("w", 3);
        let f = MultiMap::flip(&v, &w);
        let g = MultiMap::flip(&w, &v);
        assert_eq!(f.then(&g), MultiMap::identity(&[v.clone(), w.clone()]));
        assert_eq!(f.nnz(), 6);
        assert_eq!(f.get(&[2, 1], &[1, 2]), Scalar::one());
    }

    #[test]
    fn flip_with_line_is_reindexing() {
        let v = sp("v", 1);
        let w = sp("w", 4);
        let f = MultiMap::flip(&v, &w);
        for (c, d, s) in f.iter() {
            assert_eq!(c[0], d[1]);
            assert!(s.is_one());
        }
    }

    #[test]
    fn identity_is_neutral() {
        let v = sp("v", 3);
        let g = MultiMap::from_triples(&[v.clone()], &[v.clone(), v.clone()], vec![(vec![0, 1], vec![2], Scalar::from_int(5))]);
        assert_eq!(MultiMap::identity(&[v.clone(), v.clone()]).compose(&g).unwrap(), g);
        assert_eq!(g.compose(&MultiMap::identity(&[v.clone()])).unwrap(), g);
    }

    #[test]
    fn compose_shape_error() {
        let v = sp("v", 2);
        let w = sp("w", 3);
        let f = MultiMap::identity(&[v.clone()]);
        let g = MultiMap::identity(&[w]);
        assert!(f.compose(&g).is_err());
    }

    #[test]
    fn tensor_with_zero_is_zero() {
        let v = sp("v", 2);
        let z = MultiMap::zero(&[v.clone()], &[v.clone()]);
        let id = MultiMap::identity(&[v.clone()]);
        assert!(z.tensor(&id).is_zero());
        assert_eq!(id.tensor(&id), MultiMap::identity(&[v.clone(), v]));
    }

    #[test]
    fn fuse_split_round_trip() {
        let a = sp("a", 2);
        let b = sp("b", 3);
        let ab = Space::fused("ab", &[a.clone(), b.clone()]);
        assert_eq!(ab.label(4), "a1|b1");
        let f = MultiMap::fuse(&[a.clone(), b.clone()], &ab);
        assert_eq!(f.then(&MultiMap::split(&ab, &[a.clone(), b.clone()])), MultiMap::identity(&[a, b]));
    }
}
