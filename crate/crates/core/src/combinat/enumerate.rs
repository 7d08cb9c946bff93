//! Streaming, duplicate-free enumerators.
//!
//! Trees are produced in lexicographic order of their preorder arity code
//! (a leaf/empty slot is arity 0 and sorts first). Permutations and packed
//! words come in lexicographic order of their one-line words.

use itertools::Itertools;

use super::trees::{BinaryTree, MAryTree, PlaneTree};
use super::words::{Letter, PackedWord, Permutation};
use crate::error::{Error, Result};

pub const PERMUTATION_GUARD: usize = 12;
pub const PACKED_WORD_GUARD: usize = 9;

#[derive(Debug, Clone, Copy)]
enum Budget {
    /// Exactly this many internal nodes.
    Nodes(usize),
    /// Exactly this many leaves.
    Leaves(usize),
}

/// Depth-first walk over preorder arity codes of trees.
struct CodeWalker {
    arities: Vec<usize>,
    budget: Budget,
    stack: Vec<usize>,
    slots: usize,
    nodes: usize,
    leaves: usize,
    started: bool,
    done: bool,
}

impl CodeWalker {
    fn new(mut arities: Vec<usize>, budget: Budget) -> Self {
        arities.insert(0, 0);
        Self {
            arities,
            budget,
            stack: Vec::new(),
            slots: 1,
            nodes: 0,
            leaves: 0,
            started: false,
            done: false,
        }
    }

    fn apply(&mut self, a: usize) {
        self.slots = self.slots - 1 + a;
        if a == 0 {
            self.leaves += 1;
        } else {
            self.nodes += 1;
        }
    }

    fn unapply(&mut self, a: usize) {
        self.slots = self.slots + 1 - a;
        if a == 0 {
            self.leaves -= 1;
        } else {
            self.nodes -= 1;
        }
    }

    // Every feasible state can be completed, so the walk never dead-ends.
    fn feasible(&self) -> bool {
        match self.budget {
            Budget::Nodes(n) => self.nodes <= n && (self.slots > 0 || self.nodes == n),
            Budget::Leaves(l) => {
                self.leaves + self.slots <= l && (self.slots > 0 || self.leaves == l)
            }
        }
    }

    fn push_from(&mut self, start: usize) -> bool {
        for i in start..self.arities.len() {
            let a = self.arities[i];
            self.apply(a);
            if self.feasible() {
                self.stack.push(i);
                return true;
            }
            self.unapply(a);
        }
        false
    }

    fn advance(&mut self) -> bool {
        while let Some(i) = self.stack.pop() {
            self.unapply(self.arities[i]);
            if self.push_from(i + 1) {
                return true;
            }
        }
        false
    }
}

impl Iterator for CodeWalker {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        while self.slots > 0 {
            if !self.push_from(0) && !self.advance() {
                self.done = true;
                return None;
            }
        }
        Some(self.stack.iter().map(|&i| self.arities[i]).collect())
    }
}

fn decode<T>(code: &[usize], leaf: &dyn Fn() -> T, node: &dyn Fn(Vec<T>) -> T) -> T {
    fn go<T>(
        code: &[usize],
        pos: &mut usize,
        leaf: &dyn Fn() -> T,
        node: &dyn Fn(Vec<T>) -> T,
    ) -> T {
        let a = code[*pos];
        *pos += 1;
        if a == 0 {
            leaf()
        } else {
            let children = (0..a).map(|_| go(code, pos, leaf, node)).collect();
            node(children)
        }
    }
    let mut pos = 0;
    go(code, &mut pos, leaf, node)
}

/// All binary trees with `n` nodes.
pub fn binary_trees(n: usize) -> impl Iterator<Item = BinaryTree> {
    CodeWalker::new(vec![2], Budget::Nodes(n)).map(|code| {
        decode(&code, &|| BinaryTree::Empty, &|mut c: Vec<BinaryTree>| {
            let r = c.pop().expect("two children");
            let l = c.pop().expect("two children");
            BinaryTree::node(l, r)
        })
    })
}

/// All trees with `n` nodes, each node having `m + 1` child slots.
pub fn mary_trees(m: usize, n: usize) -> impl Iterator<Item = MAryTree> {
    CodeWalker::new(vec![m + 1], Budget::Nodes(n))
        .map(|code| decode(&code, &|| MAryTree::Empty, &MAryTree::node))
}

/// All plane trees with `leaves` leaves whose internal nodes have arity >= 2.
/// These are the trees of words of length `leaves - 1`.
pub fn plane_trees(leaves: usize) -> impl Iterator<Item = PlaneTree> {
    let arities: Vec<usize> = (2..=leaves.max(2)).collect();
    CodeWalker::new(arities, Budget::Leaves(leaves))
        .map(|code| decode(&code, &|| PlaneTree::Leaf, &PlaneTree::internal))
}

/// All permutations of size `n` in lexicographic order.
pub fn permutations(n: usize) -> impl Iterator<Item = Permutation> {
    (1..=n as Letter)
        .permutations(n)
        .map(Permutation::from_vec_unchecked)
}

/// All packed words of length `n` in lexicographic order.
pub fn packed_words(n: usize) -> impl Iterator<Item = PackedWord> {
    PackedWords::new(n)
}

struct PackedWords {
    n: usize,
    word: Vec<Letter>,
    counts: Vec<usize>,
    distinct: usize,
    started: bool,
    done: bool,
}

impl PackedWords {
    fn new(n: usize) -> Self {
        Self {
            n,
            word: Vec::with_capacity(n),
            counts: vec![0; n + 2],
            distinct: 0,
            started: false,
            done: false,
        }
    }

    fn max(&self) -> usize {
        (1..self.counts.len())
            .rev()
            .find(|&a| self.counts[a] > 0)
            .unwrap_or(0)
    }

    // Letters below the current maximum that still have to appear.
    fn feasible(&self) -> bool {
        let missing = self.max() - self.distinct;
        missing <= self.n - self.word.len()
    }

    fn push(&mut self, a: Letter) {
        let a = a as usize;
        if self.counts[a] == 0 {
            self.distinct += 1;
        }
        self.counts[a] += 1;
        self.word.push(a as Letter);
    }

    fn pop(&mut self) -> Option<Letter> {
        let a = self.word.pop()?;
        self.counts[a as usize] -= 1;
        if self.counts[a as usize] == 0 {
            self.distinct -= 1;
        }
        Some(a)
    }

    fn push_from(&mut self, start: Letter) -> bool {
        for a in start..=self.n as Letter {
            self.push(a);
            if self.feasible() {
                return true;
            }
            self.pop();
        }
        false
    }

    fn advance(&mut self) -> bool {
        while let Some(a) = self.pop() {
            if self.push_from(a + 1) {
                return true;
            }
        }
        false
    }
}

impl Iterator for PackedWords {
    type Item = PackedWord;

    fn next(&mut self) -> Option<PackedWord> {
        if self.done {
            return None;
        }
        if self.started && !self.advance() {
            self.done = true;
            return None;
        }
        self.started = true;
        while self.word.len() < self.n {
            if !self.push_from(1) && !self.advance() {
                self.done = true;
                return None;
            }
        }
        Some(PackedWord::from_vec_unchecked(self.word.clone()))
    }
}

/// Named families for callers that select one at run time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    BinaryTrees { n: usize },
    MAryTrees { m: usize, n: usize },
    /// Plane trees of words of length `n` (so `n + 1` leaves).
    PlaneTrees { n: usize },
    Permutations { n: usize },
    PackedWords { n: usize },
}

impl Family {
    /// Refuses factorial-size families above their guard unless overridden.
    pub fn check_guard(&self, unsafe_large: bool) -> Result<()> {
        if unsafe_large {
            return Ok(());
        }
        match *self {
            Family::Permutations { n } if n > PERMUTATION_GUARD => Err(Error::SizeGuard {
                what: "permutations",
                size: n,
                limit: PERMUTATION_GUARD,
            }),
            Family::PackedWords { n } if n > PACKED_WORD_GUARD => Err(Error::SizeGuard {
                what: "packed words",
                size: n,
                limit: PACKED_WORD_GUARD,
            }),
            _ => Ok(()),
        }
    }

    /// Canonical encodings in enumeration order.
    pub fn encodings(&self, unsafe_large: bool) -> Result<Box<dyn Iterator<Item = String>>> {
        self.check_guard(unsafe_large)?;
        Ok(match *self {
            Family::BinaryTrees { n } => Box::new(binary_trees(n).map(|t| t.to_string())),
            Family::MAryTrees { m, n } => Box::new(mary_trees(m, n).map(|t| t.to_string())),
            Family::PlaneTrees { n } => Box::new(plane_trees(n + 1).map(|t| t.to_string())),
            Family::Permutations { n } => Box::new(permutations(n).map(|p| p.to_string())),
            Family::PackedWords { n } => Box::new(packed_words(n).map(|p| p.to_string())),
        })
    }

    pub fn count(&self, unsafe_large: bool) -> Result<usize> {
        Ok(self.encodings(unsafe_large)?.count())
    }
}
