//! Dense bitset graphs: ordered clique counting and exact maximum clique.

/// Fixed-width bitset over `0..len`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BitSet {
    words: Vec<u64>,
    len: usize,
}

impl BitSet {
    pub fn new(len: usize) -> Self {
        BitSet {
            words: vec![0; len.div_ceil(64)],
            len,
        }
    }

    pub fn full(len: usize) -> Self {
        let mut s = BitSet::new(len);
        for i in 0..len {
            s.insert(i);
        }
        s
    }

    pub fn capacity(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn insert(&mut self, i: usize) {
        self.words[i / 64] |= 1 << (i % 64);
    }

    #[inline]
    pub fn remove(&mut self, i: usize) {
        self.words[i / 64] &= !(1 << (i % 64));
    }

    #[inline]
    pub fn contains(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    pub fn count(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn intersect_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= b;
        }
    }

    pub fn difference_with(&mut self, other: &BitSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersection(&self, other: &BitSet) -> BitSet {
        let mut s = self.clone();
        s.intersect_with(other);
        s
    }

    pub fn first(&self) -> Option<usize> {
        self.words
            .iter()
            .enumerate()
            .find(|(_, &w)| w != 0)
            .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    return None;
                }
                let b = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + b)
            })
        })
    }

    /// Keeps only elements greater than `i`.
    pub fn retain_above(&mut self, i: usize) {
        let wi = i / 64;
        for w in &mut self.words[..wi] {
            *w = 0;
        }
        let bit = i % 64;
        self.words[wi] &= if bit == 63 { 0 } else { !0u64 << (bit + 1) };
    }
}

/// Undirected graph as adjacency bitsets.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<BitSet>,
}

impl Graph {
    pub fn from_fn(n: usize, mut edge: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![BitSet::new(n); n];
        for i in 0..n {
            for j in i + 1..n {
                if edge(i, j) {
                    adj[i].insert(j);
                    adj[j].insert(i);
                }
            }
        }
        Graph { adj }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &BitSet {
        &self.adj[v]
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitSet::count).sum::<usize>() / 2
    }

    /// `counts[k]` is the number of cliques with `k + 1` vertices containing `root` as
    /// their smallest vertex, for clique sizes up to `max_size`.
    pub fn count_cliques_from(&self, root: usize, max_size: usize) -> Vec<u64> {
        let mut counts = vec![0u64; max_size];
        if max_size == 0 {
            return counts;
        }
        counts[0] = 1;
        let mut cand = self.adj[root].clone();
        cand.retain_above(root);
        self.extend_count(&cand, 1, max_size, &mut counts);
        counts
    }

    fn extend_count(&self, cand: &BitSet, size: usize, max_size: usize, counts: &mut [u64]) {
        if size == max_size {
            return;
        }
        for v in cand.iter() {
            counts[size] += 1;
            let mut next = cand.intersection(&self.adj[v]);
            next.retain_above(v);
            if !next.is_empty() {
                self.extend_count(&next, size + 1, max_size, counts);
            }
        }
    }

    /// All cliques of exactly `size` vertices, each sorted, in lexicographic order.
    pub fn cliques_of_size(&self, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        if size == 0 {
            return out;
        }
        let mut stack = Vec::with_capacity(size);
        for root in 0..self.order() {
            let mut cand = self.adj[root].clone();
            cand.retain_above(root);
            stack.push(root);
            self.collect(&cand, size, &mut stack, &mut out);
            stack.pop();
        }
        out
    }

    fn collect(
        &self,
        cand: &BitSet,
        size: usize,
        stack: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if stack.len() == size {
            out.push(stack.clone());
            return;
        }
        for v in cand.iter() {
            let mut next = cand.intersection(&self.adj[v]);
            next.retain_above(v);
            stack.push(v);
            self.collect(&next, size, stack, out);
            stack.pop();
        }
    }

    /// Size of a maximum clique inside `within`, by branch and bound with greedy
    /// colouring as the bound.
    pub fn max_clique_within(&self, within: &BitSet) -> usize {
        let mut best = self.greedy_clique(within);
        self.expand(within.clone(), 0, &mut best);
        best
    }

    /// Size of a clique found by repeatedly taking the candidate of highest degree
    /// within the remaining candidates. A lower bound for the search.
    pub fn greedy_clique(&self, within: &BitSet) -> usize {
        let mut cand = within.clone();
        let mut size = 0;
        while !cand.is_empty() {
            let v = cand
                .iter()
                .max_by_key(|&v| {
                    (
                        self.adj[v].intersection(&cand).count(),
                        std::cmp::Reverse(v),
                    )
                })
                .expect("non-empty");
            cand.intersect_with(&self.adj[v]);
            size += 1;
        }
        size
    }

    /// The same graph with vertices relabelled by non-increasing degree.
    pub fn degree_sorted(&self) -> Graph {
        let mut order: Vec<usize> = (0..self.order()).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(self.adj[v].count()), v));
        let adj = &self.adj;
        Graph::from_fn(order.len(), |i, j| adj[order[i]].contains(order[j]))
    }

    fn expand(&self, mut p: BitSet, size: usize, best: &mut usize) {
        let order = self.colour_order(&p);
        for &(v, colour) in order.iter().rev() {
            if size + colour <= *best {
                return;
            }
            let next = p.intersection(&self.adj[v]);
            if next.is_empty() {
                if size + 1 > *best {
                    *best = size + 1;
                }
            } else {
                self.expand(next, size + 1, best);
            }
            p.remove(v);
        }
    }

    /// Vertices of `p` with their greedy colour numbers, colours non-decreasing.
    fn colour_order(&self, p: &BitSet) -> Vec<(usize, usize)> {
        let mut uncoloured = p.clone();
        let mut out = Vec::with_capacity(p.count());
        let mut colour = 0;
        while !uncoloured.is_empty() {
            colour += 1;
            let mut avail = uncoloured.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(&self.adj[v]);
                uncoloured.remove(v);
                out.push((v, colour));
            }
        }
        out
    }
}
