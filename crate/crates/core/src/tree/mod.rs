//! Colored planar rooted trees.
//!
//! A [`Tree`] stores the forest above its (uncolored) root as a preorder list
//! of `(color, subtree size)` records. That list is the canonical encoding:
//! two trees are equal exactly when their encodings are identical, and the
//! encoding's lexicographic order is the basis order used everywhere else.
//!
//! Both products of the free algebra become slice operations on this
//! encoding. Identifying roots concatenates the two forests, and grafting a
//! new root-child `a` below `t` prepends one record whose subtree is all of
//! `t`.

mod enumerate;
mod parse;

use std::fmt;

use smallvec::SmallVec;

use crate::alphabet::{Color, Palette};
use crate::error::{Error, Result};

pub use enumerate::{enumerate_irreducible_trees, enumerate_trees, forest_shapes};
pub use parse::parse_tree;

/// One non-root vertex in preorder: its color and the number of vertices in
/// the subtree it spans (itself included).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Node {
    pub color: Color,
    pub size: u16,
}

type Nodes = SmallVec<[Node; 8]>;

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Tree {
    nodes: Nodes,
}

/// Path of 0-based child indices from the root to a non-root vertex.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub Vec<usize>);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|i| i.to_string()).collect();
        write!(f, "[{}]", parts.join("."))
    }
}

impl Tree {
    /// Builds a tree from a preorder encoding.
    ///
    /// Panics if the records do not describe a nonempty forest.
    pub fn from_nodes(nodes: impl IntoIterator<Item = Node>) -> Tree {
        let nodes: Nodes = nodes.into_iter().collect();
        assert!(is_valid_forest(&nodes), "malformed preorder encoding");
        Tree { nodes }
    }

    fn from_raw(nodes: Nodes) -> Tree {
        debug_assert!(is_valid_forest(&nodes));
        Tree { nodes }
    }

    /// The degree-one tree whose single vertex has color `a`.
    pub fn generator(a: Color) -> Tree {
        Tree::from_raw(SmallVec::from_slice(&[Node { color: a, size: 1 }]))
    }

    pub fn nodes(&self) -> &[Node] {
        &self.nodes
    }

    /// Number of non-root vertices.
    pub fn degree(&self) -> usize {
        self.nodes.len()
    }

    /// True when the root has exactly one child.
    pub fn is_irreducible(&self) -> bool {
        self.nodes[0].size as usize == self.nodes.len()
    }

    pub fn max_color(&self) -> Color {
        self.nodes.iter().map(|n| n.color).max().expect("nonempty")
    }

    /// Root identification `t · w`.
    pub fn dot(&self, other: &Tree) -> Tree {
        let mut nodes = self.nodes.clone();
        nodes.extend_from_slice(&other.nodes);
        Tree::from_raw(nodes)
    }

    /// `t ∘ a` for a generator `a`: the old root becomes a vertex colored `a`
    /// below a fresh root.
    pub fn graft(&self, a: Color) -> Tree {
        let mut nodes = Nodes::with_capacity(self.nodes.len() + 1);
        nodes.push(Node {
            color: a,
            size: (self.nodes.len() + 1) as u16,
        });
        nodes.extend_from_slice(&self.nodes);
        Tree::from_raw(nodes)
    }

    /// Preorder offsets at which each irreducible factor starts, followed by
    /// the total degree.
    pub(crate) fn factor_offsets(&self) -> SmallVec<[usize; 8]> {
        let mut out = SmallVec::new();
        let mut i = 0;
        while i < self.nodes.len() {
            out.push(i);
            i += self.nodes[i].size as usize;
        }
        out.push(self.nodes.len());
        out
    }

    /// The tree whose forest is the preorder slice `range` of this one, when
    /// that slice is a union of whole top-level subtrees.
    pub(crate) fn slice(&self, start: usize, end: usize) -> Option<Tree> {
        (start < end).then(|| Tree::from_raw(SmallVec::from_slice(&self.nodes[start..end])))
    }

    /// The unique decomposition `t = t¹ · … · tʳ` into irreducible trees.
    pub fn factorize(&self) -> Vec<Tree> {
        let offs = self.factor_offsets();
        offs.windows(2)
            .map(|w| self.slice(w[0], w[1]).expect("nonempty factor"))
            .collect()
    }

    /// Splits an irreducible `t = u ∘ a` into `(u, a)`; `u` is `None` when
    /// `t` is the generator `a`. Returns `None` for reducible trees.
    pub fn split_irreducible(&self) -> Option<(Option<Tree>, Color)> {
        if !self.is_irreducible() {
            return None;
        }
        Some((self.slice(1, self.nodes.len()), self.nodes[0].color))
    }

    /// Non-root vertices (as preorder indices) in the canonical order: every
    /// factor of a product before the next, and in an irreducible tree the
    /// vertex adjacent to the root last. This is the left-to-right postorder.
    pub fn postorder(&self) -> Vec<usize> {
        fn visit(nodes: &[Node], start: usize, end: usize, out: &mut Vec<usize>) {
            let mut i = start;
            while i < end {
                let size = nodes[i].size as usize;
                visit(nodes, i + 1, i + size, out);
                out.push(i);
                i += size;
            }
        }
        let mut out = Vec::with_capacity(self.nodes.len());
        visit(&self.nodes, 0, self.nodes.len(), &mut out);
        out
    }

    /// [`Tree::postorder`] expressed as vertex ids.
    pub fn canonical_vertex_order(&self) -> Vec<VertexId> {
        let ids = self.vertex_ids();
        self.postorder().into_iter().map(|i| ids[i].clone()).collect()
    }

    /// Vertex ids of all non-root vertices, indexed by preorder position.
    pub fn vertex_ids(&self) -> Vec<VertexId> {
        fn visit(nodes: &[Node], start: usize, end: usize, path: &mut Vec<usize>, out: &mut [VertexId]) {
            let mut i = start;
            let mut child = 0;
            while i < end {
                path.push(child);
                out[i] = VertexId(path.clone());
                visit(nodes, i + 1, i + nodes[i].size as usize, path, out);
                path.pop();
                i += nodes[i].size as usize;
                child += 1;
            }
        }
        let mut out = vec![VertexId(Vec::new()); self.nodes.len()];
        visit(&self.nodes, 0, self.nodes.len(), &mut Vec::new(), &mut out);
        out
    }

    /// Preorder index of the vertex addressed by `id`.
    pub fn resolve(&self, id: &VertexId) -> Option<usize> {
        let (mut start, mut end) = (0, self.nodes.len());
        let mut found = None;
        for &child in &id.0 {
            let mut i = start;
            for _ in 0..child {
                if i >= end {
                    return None;
                }
                i += self.nodes[i].size as usize;
            }
            if i >= end {
                return None;
            }
            found = Some(i);
            start = i + 1;
            end = i + self.nodes[i].size as usize;
        }
        found
    }

    pub fn color_at(&self, preorder_index: usize) -> Color {
        self.nodes[preorder_index].color
    }

    /// `t_A`: deletes every vertex outside `keep` and splices its children
    /// into its parent's child list at its position.
    pub fn contract(&self, keep: &[VertexId]) -> Result<Tree> {
        if keep.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut mask = vec![false; self.nodes.len()];
        for id in keep {
            let i = self
                .resolve(id)
                .ok_or_else(|| Error::InvalidVertex(id.to_string()))?;
            mask[i] = true;
        }
        Ok(self.contract_mask(&mask))
    }

    /// Contraction onto the vertices whose preorder index is set in `mask`.
    ///
    /// Deletion and splicing preserve the preorder sequence of the surviving
    /// vertices, and each survivor's new subtree is exactly the survivors of
    /// its old subtree, so the result is read off directly.
    pub fn contract_mask(&self, mask: &[bool]) -> Tree {
        assert_eq!(mask.len(), self.nodes.len());
        let mut prefix = Vec::with_capacity(mask.len() + 1);
        prefix.push(0usize);
        for &m in mask {
            prefix.push(prefix.last().unwrap() + m as usize);
        }
        assert!(*prefix.last().unwrap() > 0, "empty contraction");
        let nodes = self
            .nodes
            .iter()
            .enumerate()
            .filter(|(i, _)| mask[*i])
            .map(|(i, n)| Node {
                color: n.color,
                size: (prefix[i + n.size as usize] - prefix[i]) as u16,
            })
            .collect();
        Tree::from_raw(nodes)
    }

    /// Canonical text, e.g. `(d(a,b,c),e)`.
    pub fn render(&self, palette: &Palette) -> String {
        fn forest(nodes: &[Node], palette: &Palette, out: &mut String) {
            let mut i = 0;
            let mut first = true;
            while i < nodes.len() {
                if !first {
                    out.push(',');
                }
                first = false;
                let n = nodes[i];
                out.push_str(palette.name(n.color));
                if n.size > 1 {
                    out.push('(');
                    forest(&nodes[i + 1..i + n.size as usize], palette, out);
                    out.push(')');
                }
                i += n.size as usize;
            }
        }
        let mut out = String::from("(");
        forest(&self.nodes, palette, &mut out);
        out.push(')');
        out
    }
}

fn is_valid_forest(nodes: &[Node]) -> bool {
    fn check(nodes: &[Node]) -> bool {
        let mut i = 0;
        while i < nodes.len() {
            let size = nodes[i].size as usize;
            if size == 0 || i + size > nodes.len() || !check(&nodes[i + 1..i + size]) {
                return false;
            }
            i += size;
        }
        true
    }
    !nodes.is_empty() && nodes.len() <= u16::MAX as usize && check(nodes)
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // Without a palette, colors print as their indices.
        fn forest(nodes: &[Node], f: &mut fmt::Formatter<'_>) -> fmt::Result {
            let mut i = 0;
            while i < nodes.len() {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", nodes[i].color.index())?;
                let size = nodes[i].size as usize;
                if size > 1 {
                    write!(f, "(")?;
                    forest(&nodes[i + 1..i + size], f)?;
                    write!(f, ")")?;
                }
                i += size;
            }
            Ok(())
        }
        write!(f, "(")?;
        forest(&self.nodes, f)?;
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pal() -> Palette {
        Palette::letters(26).unwrap()
    }

    fn t(s: &str) -> Tree {
        parse_tree(&pal(), s).unwrap()
    }

    fn r(tree: &Tree) -> String {
        tree.render(&pal())
    }

    #[test]
    fn factorize_examples() {
        let f: Vec<String> = t("(a,b)").factorize().iter().map(r).collect();
        assert_eq!(f, ["(a)", "(b)"]);
        assert_eq!(t("(b(a))").factorize(), vec![t("(b(a))")]);
        let f: Vec<String> = t("(a,b(c),d)").factorize().iter().map(r).collect();
        assert_eq!(f, ["(a)", "(b(c))", "(d)"]);
    }

    #[test]
    fn grafting_and_splitting() {
        let a = pal().lookup("a").unwrap();
        let b = pal().lookup("b").unwrap();
        assert_eq!(t("(a)").graft(b), t("(b(a))"));
        assert_eq!(t("(a,c)").graft(b), t("(b(a,c))"));
        assert_eq!(t("(b(a))").split_irreducible(), Some((Some(t("(a)")), b)));
        assert_eq!(t("(a)").split_irreducible(), Some((None, a)));
        assert_eq!(t("(a,b)").split_irreducible(), None);
        assert_eq!(t("(a)").dot(&t("(b(c))")), t("(a,b(c))"));
    }

    fn order_colors(s: &str) -> String {
        let tree = t(s);
        tree.canonical_vertex_order()
            .iter()
            .map(|id| pal().name(tree.color_at(tree.resolve(id).unwrap())).to_string())
            .collect()
    }

    #[test]
    fn vertex_order_examples() {
        assert_eq!(order_colors("(a,b)"), "ab");
        assert_eq!(order_colors("(b(a))"), "ab");
        assert_eq!(order_colors("(d(a,b,c),e)"), "abcde");
    }

    #[test]
    fn vertex_ids_resolve() {
        let tree = t("(d(a,b,c),e)");
        let ids = tree.vertex_ids();
        assert_eq!(ids[0], VertexId(vec![0]));
        assert_eq!(ids[3], VertexId(vec![0, 2]));
        assert_eq!(ids[4], VertexId(vec![1]));
        for (i, id) in ids.iter().enumerate() {
            assert_eq!(tree.resolve(id), Some(i));
        }
        assert_eq!(tree.resolve(&VertexId(vec![2])), None);
        assert_eq!(tree.resolve(&VertexId(vec![1, 0])), None);
        assert_eq!(tree.resolve(&VertexId(vec![])), None);
    }

    #[test]
    fn contraction_examples() {
        let tree = t("(b(a))");
        let all = tree.vertex_ids();
        assert_eq!(tree.contract(&all).unwrap(), tree);
        assert_eq!(tree.contract(&[VertexId(vec![0, 0])]).unwrap(), t("(a)"));
        let big = t("(d(a,b,c),e)");
        let abc = [VertexId(vec![0, 0]), VertexId(vec![0, 1]), VertexId(vec![0, 2])];
        assert_eq!(big.contract(&abc).unwrap(), t("(a,b,c)"));
        let de = [VertexId(vec![0]), VertexId(vec![1])];
        assert_eq!(big.contract(&de).unwrap(), t("(d,e)"));
    }

    #[test]
    fn contraction_errors() {
        let tree = t("(b(a))");
        assert_eq!(tree.contract(&[]), Err(Error::EmptyVertexSet));
        assert!(matches!(
            tree.contract(&[VertexId(vec![3])]),
            Err(Error::InvalidVertex(_))
        ));
    }

    #[test]
    fn contraction_splices_in_place() {
        // deleting `b` puts its children between `a` and `d`
        let tree = t("(a,b(c(x),y),d)");
        let mut mask = vec![true; tree.degree()];
        mask[1] = false;
        assert_eq!(r(&tree.contract_mask(&mask)), "(a,c(x),y,d)");
        mask[2] = false;
        assert_eq!(r(&tree.contract_mask(&mask)), "(a,x,y,d)");
    }

    #[test]
    #[should_panic]
    fn malformed_encoding_panics() {
        let a = pal().lookup("a").unwrap();
        Tree::from_nodes([Node { color: a, size: 2 }]);
    }
}
