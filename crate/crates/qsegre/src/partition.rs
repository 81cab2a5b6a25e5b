//! Block Segre embeddings over binary partition trees.
//!
//! Embedding qubits pairwise and then combining the blocks is the same map
//! as the one-shot Segre embedding: the outer product is associative. A
//! [`PartitionNode`] records one bracketing of the factor sequence; the
//! four-qubit chain `((1,2),(3,4))` is the smallest case with two genuinely
//! different shapes.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::state::MultiQubitState;

/// A binary tree over subsystem blocks. A leaf lists the dimensions of the
/// subsystems it covers (a plain qubit leaf is `[2]`); a join embeds its two
/// children as blocks, left block more significant.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PartitionNode {
    Leaf(Vec<usize>),
    Join(Box<PartitionNode>, Box<PartitionNode>),
}

impl PartitionNode {
    /// Leaf over subsystems of the given dimensions, each at least 2.
    pub fn leaf(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.iter().any(|&d| d < 2) {
            return Err(Error::LeafDimensionTooSmall);
        }
        Ok(PartitionNode::Leaf(dims))
    }

    /// A single-qubit leaf.
    pub fn qubit_leaf() -> Self {
        PartitionNode::Leaf(vec![2])
    }

    pub fn join(left: PartitionNode, right: PartitionNode) -> Self {
        PartitionNode::Join(Box::new(left), Box::new(right))
    }

    /// Product of all leaf dimensions below this node.
    pub fn total_dim(&self) -> usize {
        match self {
            PartitionNode::Leaf(dims) => dims.iter().product(),
            PartitionNode::Join(l, r) => l.total_dim() * r.total_dim(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        match self {
            PartitionNode::Leaf(_) => 1,
            PartitionNode::Join(l, r) => l.leaf_count() + r.leaf_count(),
        }
    }

    /// Dimension of each leaf vector, left to right.
    pub fn leaf_dims(&self) -> Vec<usize> {
        match self {
            PartitionNode::Leaf(dims) => vec![dims.iter().product()],
            PartitionNode::Join(l, r) => {
                let mut dims = l.leaf_dims();
                dims.extend(r.leaf_dims());
                dims
            }
        }
    }

    /// Parses the CLI tree syntax: nested parentheses over qubit labels,
    /// e.g. `((1,2),(3,4))`. Labels must read `1..=m` from left to right.
    pub fn parse(input: &str) -> Result<Self> {
        let bytes = input.as_bytes();
        let mut pos = 0usize;
        let (tree, labels) = parse_node(bytes, &mut pos)?;
        skip_spaces(bytes, &mut pos);
        if pos != bytes.len() {
            return Err(Error::TreeSyntax {
                offset: pos,
                reason: "trailing input after tree".to_string(),
            });
        }
        let in_order: Vec<usize> = (1..=labels.len()).collect();
        if labels != in_order {
            return Err(Error::TreeLabelOrder {
                found: labels
                    .iter()
                    .map(|l| l.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
            });
        }
        Ok(tree)
    }
}

fn skip_spaces(bytes: &[u8], pos: &mut usize) {
    while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
        *pos += 1;
    }
}

fn parse_node(bytes: &[u8], pos: &mut usize) -> Result<(PartitionNode, Vec<usize>)> {
    skip_spaces(bytes, pos);
    match bytes.get(*pos) {
        Some(b'(') => {
            *pos += 1;
            let (left, mut labels) = parse_node(bytes, pos)?;
            skip_spaces(bytes, pos);
            if bytes.get(*pos) != Some(&b',') {
                return Err(Error::TreeSyntax {
                    offset: *pos,
                    reason: "expected ','".to_string(),
                });
            }
            *pos += 1;
            let (right, right_labels) = parse_node(bytes, pos)?;
            skip_spaces(bytes, pos);
            if bytes.get(*pos) != Some(&b')') {
                return Err(Error::TreeSyntax {
                    offset: *pos,
                    reason: "expected ')'".to_string(),
                });
            }
            *pos += 1;
            labels.extend(right_labels);
            Ok((PartitionNode::join(left, right), labels))
        }
        Some(c) if c.is_ascii_digit() => {
            let start = *pos;
            while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
                *pos += 1;
            }
            let label: usize = std::str::from_utf8(&bytes[start..*pos])
                .expect("digits are ascii")
                .parse()
                .map_err(|_| Error::TreeSyntax {
                    offset: start,
                    reason: "label out of range".to_string(),
                })?;
            Ok((PartitionNode::qubit_leaf(), vec![label]))
        }
        _ => Err(Error::TreeSyntax {
            offset: *pos,
            reason: "expected '(' or a qubit label".to_string(),
        }),
    }
}

/// Outer product of two amplitude blocks: `out[i·d2 + j] = left[i] · right[j]`.
/// The left block is the more significant one, matching the rank convention.
pub fn block_segre(left: &[Complex64], right: &[Complex64]) -> Result<Vec<Complex64>> {
    if left.iter().all(|a| *a == Complex64::ZERO) || right.iter().all(|a| *a == Complex64::ZERO) {
        return Err(Error::ZeroVector);
    }
    let mut out = Vec::with_capacity(left.len() * right.len());
    for l in left {
        for r in right {
            out.push(l * r);
        }
    }
    Ok(out)
}

/// Applies [`block_segre`] bottom-up over a partition tree. The output norm
/// is the product of the input norms; no normalization is applied. For any
/// tree shape over the same leaves the result equals the one-shot embedding
/// of those leaves.
pub fn compose_partition(
    tree: &PartitionNode,
    leaf_vectors: &[Vec<Complex64>],
) -> Result<MultiQubitState> {
    let dims = tree.leaf_dims();
    if dims.len() != leaf_vectors.len() {
        return Err(Error::LeafCountMismatch {
            expected: dims.len(),
            got: leaf_vectors.len(),
        });
    }
    for (position, (expected, vector)) in dims.iter().zip(leaf_vectors).enumerate() {
        if *expected != vector.len() {
            return Err(Error::LeafDimensionMismatch {
                position: position + 1,
                expected: *expected,
                got: vector.len(),
            });
        }
    }
    let total = tree.total_dim();
    if !total.is_power_of_two() || total < 2 {
        return Err(Error::NonQubitTree { dim: total });
    }
    let mut next_leaf = 0usize;
    let amplitudes = eval_node(tree, leaf_vectors, &mut next_leaf)?;
    MultiQubitState::from_amplitudes(total.trailing_zeros() as usize, amplitudes)
}

fn eval_node(
    node: &PartitionNode,
    leaf_vectors: &[Vec<Complex64>],
    next_leaf: &mut usize,
) -> Result<Vec<Complex64>> {
    match node {
        PartitionNode::Leaf(_) => {
            let vector = leaf_vectors[*next_leaf].clone();
            *next_leaf += 1;
            if vector.iter().all(|a| *a == Complex64::ZERO) {
                return Err(Error::ZeroVector);
            }
            Ok(vector)
        }
        PartitionNode::Join(l, r) => {
            let left = eval_node(l, leaf_vectors, next_leaf)?;
            let right = eval_node(r, leaf_vectors, next_leaf)?;
            block_segre(&left, &right)
        }
    }
}
