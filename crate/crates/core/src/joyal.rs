//! Joyal's bijection `{trees on X} × X × X ≅ {functions X -> X}` for
//! `X = {0, ..., n-1}`.
//!
//! The path between the two marked vertices, read in path order, is turned
//! into a permutation of its vertex set by comparing it with the natural
//! order: the `i`-th smallest path vertex is sent to the `i`-th vertex along
//! the path. Every other vertex is sent one step toward the path.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::error::{Error, Result};

/// A tree on the vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tree {
    n: usize,
    /// Normalized `(min, max)` pairs, sorted.
    edges: Vec<(usize, usize)>,
}

impl Tree {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidTree(
                "a tree needs at least one vertex".into(),
            ));
        }
        if edges.len() != n - 1 {
            return Err(Error::InvalidTree(format!(
                "{} edges for {n} vertices",
                edges.len()
            )));
        }
        let mut norm = BTreeSet::new();
        for &(a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::InvalidVertex { vertex: x, n });
                }
            }
            if a == b {
                return Err(Error::InvalidTree(format!("self-loop at {a}")));
            }
            if !norm.insert((a.min(b), a.max(b))) {
                return Err(Error::InvalidTree(format!("repeated edge {{{a}, {b}}}")));
            }
        }
        let tree = Tree {
            n,
            edges: norm.into_iter().collect(),
        };
        // n - 1 edges and connected means acyclic.
        if tree.bfs_parents(&[0]).iter().any(Option::is_none) {
            return Err(Error::InvalidTree("graph is not connected".into()));
        }
        Ok(tree)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.n];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }

    /// Multi-source BFS: `parent[x]` is the neighbor of `x` one step closer
    /// to the sources; sources map to themselves. `None` means unreachable.
    fn bfs_parents(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let adj = self.adjacency();
        let mut parent = vec![None; self.n];
        let mut queue = VecDeque::new();
        for &s in sources {
            parent[s] = Some(s);
            queue.push_back(s);
        }
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                if parent[y].is_none() {
                    parent[y] = Some(x);
                    queue.push_back(y);
                }
            }
        }
        parent
    }

    /// The unique path from `from` to `to`, both included.
    pub fn path(&self, from: usize, to: usize) -> Result<Vec<usize>> {
        for x in [from, to] {
            if x >= self.n {
                return Err(Error::InvalidVertex {
                    vertex: x,
                    n: self.n,
                });
            }
        }
        let parent = self.bfs_parents(&[to]);
        let mut path = vec![from];
        let mut x = from;
        while x != to {
            x = parent[x].expect("trees are connected");
            path.push(x);
        }
        Ok(path)
    }
}

/// A function `{0..n} -> {0..n}` as its value table.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EndoFunction {
    table: Vec<usize>,
}

impl EndoFunction {
    pub fn new(table: Vec<usize>) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::InvalidFunction("the domain must be nonempty".into()));
        }
        if let Some(&bad) = table.iter().find(|&&y| y >= n) {
            return Err(Error::InvalidFunction(format!(
                "value {bad} outside 0..{n}"
            )));
        }
        Ok(EndoFunction { table })
    }

    pub fn n(&self) -> usize {
        self.table.len()
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn apply(&self, x: usize) -> usize {
        self.table[x]
    }

    /// `f^n(X)`, which is exactly the set of periodic points, ascending.
    pub fn periodic_points(&self) -> Vec<usize> {
        let mut image: Vec<usize> = (0..self.n()).collect();
        for _ in 0..self.n() {
            image = image.iter().map(|&x| self.table[x]).collect();
        }
        image.sort_unstable();
        image.dedup();
        image
    }

    /// Lexicographic rank among all `n^n` functions, `f(0)` most significant.
    pub fn index(&self) -> u64 {
        let n = self.n() as u64;
        self.table.iter().fold(0, |acc, &y| acc * n + y as u64)
    }

    pub fn from_index(n: usize, mut index: u64) -> Self {
        let mut table = vec![0; n];
        for slot in table.iter_mut().rev() {
            *slot = (index % n as u64) as usize;
            index /= n as u64;
        }
        EndoFunction { table }
    }
}

/// Some iterate of `f` is constant.
pub fn is_eventually_constant(f: &EndoFunction) -> bool {
    let periodic = f.periodic_points();
    periodic.len() == 1 && f.apply(periodic[0]) == periodic[0]
}

pub fn joyal_forward(tree: &Tree, v: usize, v2: usize) -> Result<EndoFunction> {
    let path = tree.path(v, v2)?;
    let mut sorted = path.clone();
    sorted.sort_unstable();

    let parent = tree.bfs_parents(&path);
    let mut table: Vec<usize> = parent
        .into_iter()
        .map(|p| p.expect("trees are connected"))
        .collect();
    for (&a, &b) in sorted.iter().zip(&path) {
        table[a] = b;
    }
    EndoFunction::new(table)
}

pub fn joyal_inverse(f: &EndoFunction) -> (Tree, usize, usize) {
    let periodic = f.periodic_points();
    let path: Vec<usize> = periodic.iter().map(|&a| f.apply(a)).collect();
    let on_path: HashSet<usize> = periodic.iter().copied().collect();

    let mut edges: Vec<(usize, usize)> = path.windows(2).map(|w| (w[0], w[1])).collect();
    edges.extend(
        (0..f.n())
            .filter(|x| !on_path.contains(x))
            .map(|x| (x, f.apply(x))),
    );
    let tree = Tree::new(f.n(), &edges).expect("joyal_inverse always yields a tree");
    (tree, path[0], path[path.len() - 1])
}

/// Number of distinct trees among the `joyal_inverse` images of all `n^n`
/// functions. Cost grows as `n^n`.
pub fn count_trees(n: usize) -> Result<u64> {
    Ok(distinct_trees(n)?.len() as u64)
}

/// All trees on `0..n`, collected from `joyal_inverse` over every function.
pub fn distinct_trees(n: usize) -> Result<BTreeSet<Tree>> {
    if n == 0 {
        return Err(Error::InvalidTree(
            "a tree needs at least one vertex".into(),
        ));
    }
    let total = (n as u64).pow(n as u32);
    Ok((0..total)
        .map(|i| joyal_inverse(&EndoFunction::from_index(n, i)).0)
        .collect())
}

/// Eventually constant functions among all `n^n`, by predicate scan.
pub fn count_eventually_constant(n: usize) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidFunction("the domain must be nonempty".into()));
    }
    let total = (n as u64).pow(n as u32);
    Ok((0..total)
        .filter(|&i| is_eventually_constant(&EndoFunction::from_index(n, i)))
        .count() as u64)
}
