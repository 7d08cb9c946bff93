//! Tree shapes indexing the expansions: binary, (m+1)-ary and plane trees.
//!
//! Text grammar (the single source of truth for equality across modules):
//!
//! ```text
//! BinaryTree ::= "_" | "(" BinaryTree "," BinaryTree ")"
//! MAryTree   ::= "_" | "(" MAryTree ("," MAryTree){m} ")"
//! PlaneTree  ::= "*" | "(" PlaneTree PlaneTree+ ")"
//! ```

use std::fmt;
use std::str::FromStr;

use super::words::{Letter, Permutation};
use crate::error::{Error, Result};

/// Common view used by the expansion engines.
pub trait Shape: Clone + Eq + std::hash::Hash + fmt::Display + Send + Sync {
    /// Subtrees in order; empty for a leaf.
    fn children(&self) -> Vec<&Self>;

    /// Number of operator applications below the root, i.e. a lower bound on
    /// the valuation of the term this shape indexes.
    fn weight(&self) -> usize;
}

/// Incomplete binary tree: `Empty` plays the role of a leaf of the
/// complete tree.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BinaryTree {
    Empty,
    Node {
        left: Box<BinaryTree>,
        right: Box<BinaryTree>,
        size: usize,
    },
}

impl BinaryTree {
    pub fn node(left: BinaryTree, right: BinaryTree) -> Self {
        let size = 1 + left.node_count() + right.node_count();
        Self::Node {
            left: Box::new(left),
            right: Box::new(right),
            size,
        }
    }

    pub fn leaf_node() -> Self {
        Self::node(Self::Empty, Self::Empty)
    }

    pub fn node_count(&self) -> usize {
        match self {
            Self::Empty => 0,
            Self::Node { size, .. } => *size,
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, Self::Empty)
    }

    pub fn split(&self) -> Option<(&BinaryTree, &BinaryTree)> {
        match self {
            Self::Empty => None,
            Self::Node { left, right, .. } => Some((left, right)),
        }
    }

    /// A chain of `n` nodes hanging to the left.
    pub fn left_comb(n: usize) -> Self {
        (0..n).fold(Self::Empty, |acc, _| Self::node(acc, Self::Empty))
    }

    /// Subtree sizes and right-subtree sizes of every node, in preorder.
    pub fn hook_data(&self) -> HookData {
        fn walk(t: &BinaryTree, hooks: &mut Vec<usize>, rights: &mut Vec<usize>) {
            if let BinaryTree::Node { left, right, size } = t {
                hooks.push(*size);
                rights.push(right.node_count());
                walk(left, hooks, rights);
                walk(right, hooks, rights);
            }
        }
        let mut hooks = Vec::with_capacity(self.node_count());
        let mut rights = Vec::with_capacity(self.node_count());
        walk(self, &mut hooks, &mut rights);
        HookData {
            hooks,
            right_sizes: Some(rights),
        }
    }
}

impl Shape for BinaryTree {
    fn children(&self) -> Vec<&Self> {
        match self {
            Self::Empty => Vec::new(),
            Self::Node { left, right, .. } => vec![left, right],
        }
    }
    fn weight(&self) -> usize {
        self.node_count()
    }
}

impl fmt::Display for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => f.write_str("_"),
            Self::Node { left, right, .. } => write!(f, "({left},{right})"),
        }
    }
}

impl fmt::Debug for BinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BinaryTree({self})")
    }
}

impl FromStr for BinaryTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let t = p.binary()?;
        p.finish()?;
        Ok(t)
    }
}

/// Tree whose nodes all have exactly `m + 1` (possibly empty) children.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MAryTree {
    Empty,
    Node { children: Vec<MAryTree>, size: usize },
}

impl MAryTree {
    pub fn node(children: Vec<MAryTree>) -> Self {
        let size = 1 + children.iter().map(MAryTree::node_count).sum::<usize>();
        Self::Node { children, size }
    }

    pub fn node_count(&self) -> usize {
        match self {
            Self::Empty => 0,
            Self::Node { size, .. } => *size,
        }
    }

    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let mut p = Parser::new(s);
        let t = p.mary(m + 1)?;
        p.finish()?;
        Ok(t)
    }

    /// Subtree sizes in preorder. Right-subtree sizes are not defined here.
    pub fn hook_data(&self) -> HookData {
        fn walk(t: &MAryTree, hooks: &mut Vec<usize>) {
            if let MAryTree::Node { children, size } = t {
                hooks.push(*size);
                children.iter().for_each(|c| walk(c, hooks));
            }
        }
        let mut hooks = Vec::with_capacity(self.node_count());
        walk(self, &mut hooks);
        HookData {
            hooks,
            right_sizes: None,
        }
    }
}

impl Shape for MAryTree {
    fn children(&self) -> Vec<&Self> {
        match self {
            Self::Empty => Vec::new(),
            Self::Node { children, .. } => children.iter().collect(),
        }
    }
    fn weight(&self) -> usize {
        self.node_count()
    }
}

impl fmt::Display for MAryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Empty => f.write_str("_"),
            Self::Node { children, .. } => {
                f.write_str("(")?;
                for (i, c) in children.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for MAryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MAryTree({self})")
    }
}

/// Plane tree whose internal nodes have at least two children.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PlaneTree {
    Leaf,
    Internal {
        children: Vec<PlaneTree>,
        internal_count: usize,
        leaf_count: usize,
    },
}

impl PlaneTree {
    /// Panics if fewer than two children are given.
    pub fn internal(children: Vec<PlaneTree>) -> Self {
        assert!(children.len() >= 2, "plane tree nodes need at least two children");
        let internal_count = 1 + children.iter().map(PlaneTree::internal_count).sum::<usize>();
        let leaf_count = children.iter().map(PlaneTree::leaf_count).sum();
        Self::Internal {
            children,
            internal_count,
            leaf_count,
        }
    }

    pub fn internal_count(&self) -> usize {
        match self {
            Self::Leaf => 0,
            Self::Internal { internal_count, .. } => *internal_count,
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            Self::Leaf => 1,
            Self::Internal { leaf_count, .. } => *leaf_count,
        }
    }

    /// Arity of every internal node, in preorder.
    pub fn arities(&self) -> Vec<usize> {
        fn walk(t: &PlaneTree, out: &mut Vec<usize>) {
            if let PlaneTree::Internal { children, .. } = t {
                out.push(children.len());
                children.iter().for_each(|c| walk(c, out));
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl Shape for PlaneTree {
    fn children(&self) -> Vec<&Self> {
        match self {
            Self::Leaf => Vec::new(),
            Self::Internal { children, .. } => children.iter().collect(),
        }
    }
    /// Leaves minus one: the length of the words mapping to this tree.
    fn weight(&self) -> usize {
        self.leaf_count() - 1
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Leaf => f.write_str("*"),
            Self::Internal { children, .. } => {
                f.write_str("(")?;
                for c in children {
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
        }
    }
}

impl fmt::Debug for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneTree({self})")
    }
}

impl FromStr for PlaneTree {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let mut p = Parser::new(s);
        let t = p.plane()?;
        p.finish()?;
        Ok(t)
    }
}

/// Hook lengths (subtree sizes) of every node, plus the right-subtree sizes
/// for binary trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HookData {
    pub hooks: Vec<usize>,
    pub right_sizes: Option<Vec<usize>>,
}

impl HookData {
    pub fn node_count(&self) -> usize {
        self.hooks.len()
    }

    /// Sum of the right-subtree sizes; zero when undefined.
    pub fn right_total(&self) -> usize {
        self.right_sizes.as_ref().map_or(0, |r| r.iter().sum())
    }

    pub fn sorted_hooks(&self) -> Vec<usize> {
        let mut h = self.hooks.clone();
        h.sort_unstable_by(|a, b| b.cmp(a));
        h
    }
}

/// Shape of the decreasing tree: the maximum is the root, the factors to
/// its left and right give the subtrees.
pub fn decreasing_tree(p: &Permutation) -> BinaryTree {
    fn build(w: &[Letter]) -> BinaryTree {
        match w.iter().enumerate().max_by_key(|(_, &a)| a) {
            None => BinaryTree::Empty,
            Some((i, _)) => BinaryTree::node(build(&w[..i]), build(&w[i + 1..])),
        }
    }
    build(p.word())
}

/// Splits `w` at the occurrences of its maximum and grafts the trees of the
/// blocks on a common root; the empty word gives a leaf.
pub fn plane_tree_of_word(w: &[Letter]) -> PlaneTree {
    let Some(&m) = w.iter().max() else {
        return PlaneTree::Leaf;
    };
    let children = w
        .split(|&a| a == m)
        .map(plane_tree_of_word)
        .collect();
    PlaneTree::internal(children)
}

struct Parser<'a> {
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn new(s: &'a str) -> Self {
        Self {
            bytes: s.trim().as_bytes(),
            pos: 0,
        }
    }

    fn err<T>(&self, what: &str) -> Result<T> {
        Err(Error::Parse(format!(
            "{what} at offset {} in {:?}",
            self.pos,
            String::from_utf8_lossy(self.bytes)
        )))
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            self.err(&format!("expected {:?}", b as char))
        }
    }

    fn finish(&self) -> Result<()> {
        if self.pos == self.bytes.len() {
            Ok(())
        } else {
            self.err("trailing input")
        }
    }

    fn binary(&mut self) -> Result<BinaryTree> {
        match self.peek() {
            Some(b'_') => {
                self.pos += 1;
                Ok(BinaryTree::Empty)
            }
            Some(b'(') => {
                self.pos += 1;
                let l = self.binary()?;
                self.expect(b',')?;
                let r = self.binary()?;
                self.expect(b')')?;
                Ok(BinaryTree::node(l, r))
            }
            _ => self.err("expected '_' or '('"),
        }
    }

    fn mary(&mut self, arity: usize) -> Result<MAryTree> {
        match self.peek() {
            Some(b'_') => {
                self.pos += 1;
                Ok(MAryTree::Empty)
            }
            Some(b'(') => {
                self.pos += 1;
                let mut children = Vec::with_capacity(arity);
                for i in 0..arity {
                    if i > 0 {
                        self.expect(b',')?;
                    }
                    children.push(self.mary(arity)?);
                }
                self.expect(b')')?;
                Ok(MAryTree::node(children))
            }
            _ => self.err("expected '_' or '('"),
        }
    }

    fn plane(&mut self) -> Result<PlaneTree> {
        match self.peek() {
            Some(b'*') => {
                self.pos += 1;
                Ok(PlaneTree::Leaf)
            }
            Some(b'(') => {
                self.pos += 1;
                let mut children = Vec::new();
                while self.peek() != Some(b')') {
                    children.push(self.plane()?);
                }
                if children.len() < 2 {
                    return self.err("plane tree node with fewer than two children");
                }
                self.expect(b')')?;
                Ok(PlaneTree::internal(children))
            }
            _ => self.err("expected '*' or '('"),
        }
    }
}
