//! Evaluation of string diagrams: maps are placed as nodes on typed wires and
//! the whole diagram is contracted to a single `MultiMap`.
//!
//! Each wire is produced once (by a diagram input or a node output) and
//! consumed once (by a node input or a diagram output). Contraction is greedy
//! over pairs of sparse tensors sharing a wire, smallest product of entry
//! counts first.

use std::collections::HashMap;

use crate::scalar::Scalar;
use crate::tensor::{multi_indices, MultiMap, Space};

pub type Wire = usize;

#[derive(Default)]
pub struct Net {
    spaces: Vec<Space>,
    inputs: Vec<Wire>,
    nodes: Vec<(Vec<Wire>, MultiMap)>,
}

struct Tensor {
    wires: Vec<Wire>,
    entries: Vec<(Vec<u32>, Scalar)>,
}

impl Net {
    pub fn new() -> Net {
        Net::default()
    }

    fn wire(&mut self, s: &Space) -> Wire {
        self.spaces.push(s.clone());
        self.spaces.len() - 1
    }

    pub fn input(&mut self, s: &Space) -> Wire {
        let w = self.wire(s);
        self.inputs.push(w);
        w
    }

    pub fn inputs(&mut self, ss: &[Space]) -> Vec<Wire> {
        ss.iter().map(|s| self.input(s)).collect()
    }

    pub fn space(&self, w: Wire) -> &Space {
        &self.spaces[w]
    }

    /// Place `map` on the given wires; returns its output wires.
    pub fn apply(&mut self, map: &MultiMap, ins: &[Wire]) -> Vec<Wire> {
        assert_eq!(map.domain().len(), ins.len(), "arity mismatch applying map");
        for (s, &w) in map.domain().iter().zip(ins) {
            assert_eq!(s.dim(), self.spaces[w].dim(), "dimension mismatch on wire {w} ({} vs {})", s.name(), self.spaces[w].name());
        }
        let outs: Vec<Wire> = map.codomain().iter().map(|s| self.wire(s)).collect();
        let mut ws = outs.clone();
        ws.extend_from_slice(ins);
        self.nodes.push((ws, map.clone()));
        outs
    }

    /// Apply a map with exactly one output wire.
    pub fn apply1(&mut self, map: &MultiMap, ins: &[Wire]) -> Wire {
        let o = self.apply(map, ins);
        assert_eq!(o.len(), 1);
        o[0]
    }

    /// Multiply the whole diagram by a scalar.
    pub fn scale(&mut self, s: Scalar) {
        self.nodes.push((vec![], MultiMap::scalar(s)));
    }

    /// Contract the diagram to a map from the declared inputs (in creation
    /// order) to `outs`.
    pub fn eval(&self, outs: &[Wire]) -> MultiMap {
        self.eval_with_inputs(&self.inputs, outs)
    }

    /// Contract with an explicit ordering of the diagram inputs.
    pub fn eval_with_inputs(&self, ins: &[Wire], outs: &[Wire]) -> MultiMap {
        let mut uses: HashMap<Wire, usize> = HashMap::new();
        for (ws, m) in &self.nodes {
            for &w in &ws[m.codomain().len()..] {
                *uses.entry(w).or_default() += 1;
            }
        }
        for &w in outs {
            *uses.entry(w).or_default() += 1;
        }
        for (w, &u) in &uses {
            assert_eq!(u, 1, "wire {w} consumed {u} times");
        }
        for (ws, m) in &self.nodes {
            for &w in &ws[..m.codomain().len()] {
                assert!(uses.contains_key(&w), "output wire {w} of a node is never consumed");
            }
        }
        let mut sorted_ins = ins.to_vec();
        sorted_ins.sort();
        let mut declared = self.inputs.clone();
        declared.sort();
        assert_eq!(sorted_ins, declared, "input ordering must list every diagram input");
        for &w in ins {
            assert!(uses.contains_key(&w), "diagram input wire {w} is discarded");
        }

        let mut factor = Scalar::one();
        let mut tensors: Vec<Tensor> = Vec::new();
        for (ws, m) in &self.nodes {
            if ws.is_empty() {
                factor = &factor * &m.as_scalar();
                continue;
            }
            tensors.push(Tensor { wires: ws.clone(), entries: m.entries().iter().map(|(k, v)| (k.clone(), v.clone())).collect() });
        }
        if factor.is_zero() {
            let cod: Vec<Space> = outs.iter().map(|&w| self.spaces[w].clone()).collect();
            let dom: Vec<Space> = ins.iter().map(|&w| self.spaces[w].clone()).collect();
            return MultiMap::zero(&dom, &cod);
        }

        while tensors.len() > 1 {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in 0..tensors.len() {
                for j in i + 1..tensors.len() {
                    if tensors[i].wires.iter().any(|w| tensors[j].wires.contains(w)) {
                        let cost = tensors[i].entries.len().max(1) * tensors[j].entries.len().max(1);
                        if best.map_or(true, |b| cost < b.2) {
                            best = Some((i, j, cost));
                        }
                    }
                }
            }
            let (i, j) = match best {
                Some((i, j, _)) => (i, j),
                None => {
                    let mut order: Vec<usize> = (0..tensors.len()).collect();
                    order.sort_by_key(|&k| (tensors[k].entries.len(), k));
                    let (a, b) = (order[0].min(order[1]), order[0].max(order[1]));
                    (a, b)
                }
            };
            let tj = tensors.remove(j);
            let ti = tensors.remove(i);
            let t = contract(&ti, &tj);
            if t.entries.is_empty() {
                let cod: Vec<Space> = outs.iter().map(|&w| self.spaces[w].clone()).collect();
                let dom: Vec<Space> = ins.iter().map(|&w| self.spaces[w].clone()).collect();
                return MultiMap::zero(&dom, &cod);
            }
            tensors.push(t);
        }
        let t = tensors.pop().unwrap_or(Tensor { wires: vec![], entries: vec![(vec![], Scalar::one())] });

        let key_wires: Vec<Wire> = outs.iter().chain(ins.iter()).copied().collect();
        let free: Vec<Wire> = {
            let mut f: Vec<Wire> = outs.iter().copied().filter(|w| ins.contains(w) && !t.wires.contains(w)).collect();
            f.dedup();
            f
        };
        let free_spaces: Vec<Space> = free.iter().map(|&w| self.spaces[w].clone()).collect();
        let pos: Vec<(bool, usize)> = key_wires
            .iter()
            .map(|w| match t.wires.iter().position(|x| x == w) {
                Some(p) => (true, p),
                None => (false, free.iter().position(|x| x == w).expect("dangling wire in diagram")),
            })
            .collect();
        let free_idx: Vec<Vec<u32>> = multi_indices(&free_spaces).collect();
        let mut items = Vec::with_capacity(t.entries.len() * free_idx.len());
        for (k, v) in &t.entries {
            let s = &factor * v;
            for f in &free_idx {
                let key: Vec<u32> = pos.iter().map(|&(in_t, p)| if in_t { k[p] } else { f[p] }).collect();
                items.push((key, s.clone()));
            }
        }
        let cod: Vec<Space> = outs.iter().map(|&w| self.spaces[w].clone()).collect();
        let dom: Vec<Space> = ins.iter().map(|&w| self.spaces[w].clone()).collect();
        MultiMap::from_keys(&dom, &cod, items)
    }
}

fn contract(a: &Tensor, b: &Tensor) -> Tensor {
    let shared: Vec<Wire> = a.wires.iter().copied().filter(|w| b.wires.contains(w)).collect();
    let a_sh: Vec<usize> = shared.iter().map(|w| a.wires.iter().position(|x| x == w).unwrap()).collect();
    let b_sh: Vec<usize> = shared.iter().map(|w| b.wires.iter().position(|x| x == w).unwrap()).collect();
    let a_rest: Vec<usize> = (0..a.wires.len()).filter(|p| !a_sh.contains(p)).collect();
    let b_rest: Vec<usize> = (0..b.wires.len()).filter(|p| !b_sh.contains(p)).collect();
    let wires: Vec<Wire> = a_rest.iter().map(|&p| a.wires[p]).chain(b_rest.iter().map(|&p| b.wires[p])).collect();

    let mut index: HashMap<Vec<u32>, Vec<usize>> = HashMap::new();
    for (n, (k, _)) in b.entries.iter().enumerate() {
        index.entry(b_sh.iter().map(|&p| k[p]).collect()).or_default().push(n);
    }
    let mut acc: HashMap<Vec<u32>, Scalar> = HashMap::new();
    for (ka, va) in &a.entries {
        let key: Vec<u32> = a_sh.iter().map(|&p| ka[p]).collect();
        if let Some(list) = index.get(&key) {
            for &n in list {
                let (kb, vb) = &b.entries[n];
                let mut k: Vec<u32> = Vec::with_capacity(wires.len());
                k.extend(a_rest.iter().map(|&p| ka[p]));
                k.extend(b_rest.iter().map(|&p| kb[p]));
                let prod = va * vb;
                match acc.get_mut(&k) {
                    Some(v) => *v += &prod,
                    None => {
                        acc.insert(k, prod);
                    }
                }
            }
        }
    }
    let entries = acc.into_iter().filter(|(_, v)| !v.is_zero()).collect();
    Tensor { wires, entries }
}

/// `x` followed by `fs` applied side by side, each consuming the next
/// codomain legs of `x` in order. Avoids materializing f⊗g.
pub fn then_parallel(x: &MultiMap, fs: &[&MultiMap]) -> MultiMap {
    let mut n = Net::new();
    let ins = n.inputs(x.domain());
    let mid = n.apply(x, &ins);
    let mut outs = Vec::new();
    let mut k = 0;
    for f in fs {
        let m = f.domain().len();
        outs.extend(n.apply(f, &mid[k..k + m]));
        k += m;
    }
    assert_eq!(k, mid.len(), "then_parallel: leg count mismatch");
    n.eval(&outs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(n: &str, d: usize) -> Space {
        Space::numbered(n, n, d)
    }

    #[test]
    fn matches_compose_and_tensor() {
        let v = sp("v", 2);
        let f = MultiMap::from_triples(&[v.clone(), v.clone()], &[v.clone()], vec![
            (vec![0], vec![0, 0], Scalar::one()),
            (vec![1], vec![0, 1], Scalar::from_int(2)),
            (vec![1], vec![1, 0], Scalar::from_int(3)),
            (vec![0], vec![1, 1], Scalar::from_int(-1)),
        ]);
        let mut n = Net::new();
        let a = n.input(&v);
        let b = n.input(&v);
        let c = n.input(&v);
        let ab = n.apply1(&f, &[a, b]);
        let out = n.apply1(&f, &[ab, c]);
        let direct = f.compose(&f.tensor(&MultiMap::identity(&[v.clone()]))).unwrap();
        assert_eq!(n.eval(&[out]), direct);
    }

    #[test]
    fn passthrough_and_swap() {
        let v = sp("v", 2);
        let w = sp("w", 3);
        let mut n = Net::new();
        let a = n.input(&v);
        let b = n.input(&w);
        assert_eq!(n.eval(&[b, a]), MultiMap::flip(&v, &w));
        assert_eq!(n.eval(&[a, b]), MultiMap::identity(&[v, w]));
    }

    #[test]
    fn scalar_diagram() {
        let v = sp("v", 2);
        let unit = MultiMap::vector(&[v.clone()], vec![(vec![0], Scalar::from_int(2)), (vec![1], Scalar::one())]);
        let eps = MultiMap::from_triples(&[v.clone()], &[], vec![(vec![], vec![0], Scalar::one()), (vec![], vec![1], Scalar::from_int(5))]);
        let mut n = Net::new();
        let x = n.apply1(&unit, &[]);
        n.apply(&eps, &[x]);
        n.scale(Scalar::from_int(3));
        assert_eq!(n.eval(&[]).as_scalar(), Scalar::from_int(21));
    }
}
