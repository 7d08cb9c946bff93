//! Permutations, packed words and tree shapes, with their statistics,
//! canonical maps and exhaustive enumerators.

pub mod enumerate;
pub mod trees;
pub mod words;

pub use enumerate::{
    binary_trees, mary_trees, packed_words, permutations, plane_trees, Family,
    PACKED_WORD_GUARD, PERMUTATION_GUARD,
};
pub use trees::{
    decreasing_tree, plane_tree_of_word, BinaryTree, HookData, MAryTree, PlaneTree, Shape,
};
pub use words::{format_word, pack, parse_word, standardize, Letter, PackedWord, Permutation};
