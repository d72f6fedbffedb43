use super::{Node, Tree};
use crate::alphabet::{Palette, Symbol};
use crate::error::{Error, Result};

/// Uncolored forests with `n` vertices, as preorder subtree-size lists.
///
/// Order: by the size of the first tree, then recursively by the shape of the
/// forest above its root, then by the shape of the remaining forest.
pub fn forest_shapes(n: usize) -> Vec<Vec<u16>> {
    let mut memo: Vec<Vec<Vec<u16>>> = vec![vec![Vec::new()]];
    for m in 1..=n {
        let mut shapes = Vec::new();
        for k in 1..=m {
            for inner in &memo[k - 1] {
                for rest in &memo[m - k] {
                    let mut s = Vec::with_capacity(m);
                    s.push(k as u16);
                    s.extend_from_slice(inner);
                    s.extend_from_slice(rest);
                    shapes.push(s);
                }
            }
        }
        memo.push(shapes);
    }
    memo.swap_remove(n)
}

fn colorings(shape: &[u16], palette: &Palette, out: &mut Vec<Tree>) {
    let d = palette.len();
    let mut digits = vec![0usize; shape.len()];
    loop {
        out.push(Tree::from_raw(
            shape
                .iter()
                .zip(&digits)
                .map(|(&size, &c)| Node {
                    color: Symbol(c as u16),
                    size,
                })
                .collect(),
        ));
        let mut pos = digits.len();
        loop {
            if pos == 0 {
                return;
            }
            pos -= 1;
            digits[pos] += 1;
            if digits[pos] < d {
                break;
            }
            digits[pos] = 0;
        }
    }
}

/// Every tree of degree `n` colored from `palette`: shapes in
/// [`forest_shapes`] order, then colorings in palette-lexicographic order of
/// the preorder color sequence.
pub fn enumerate_trees(n: usize, palette: &Palette) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut out = Vec::new();
    for shape in forest_shapes(n) {
        colorings(&shape, palette, &mut out);
    }
    Ok(out)
}

/// The trees of degree `n` whose root has a single child.
pub fn enumerate_irreducible_trees(n: usize, palette: &Palette) -> Result<Vec<Tree>> {
    if n == 0 {
        return Err(Error::ZeroDegree);
    }
    let mut out = Vec::new();
    for shape in forest_shapes(n).into_iter().filter(|s| s[0] as usize == n) {
        colorings(&shape, palette, &mut out);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let one = Palette::letters(1).unwrap();
        let two = Palette::letters(2).unwrap();
        assert_eq!(enumerate_trees(1, &one).unwrap().len(), 1);
        assert_eq!(enumerate_trees(3, &one).unwrap().len(), 5);
        assert_eq!(enumerate_trees(2, &two).unwrap().len(), 8);
        assert_eq!(enumerate_irreducible_trees(4, &one).unwrap().len(), 5);
        assert_eq!(enumerate_trees(0, &one), Err(Error::ZeroDegree));
    }

    #[test]
    fn order_is_by_first_subtree_size() {
        let p = Palette::letters(2).unwrap();
        let names: Vec<String> = enumerate_trees(2, &p)
            .unwrap()
            .iter()
            .map(|t| t.render(&p))
            .collect();
        assert_eq!(
            names,
            ["(a,a)", "(a,b)", "(b,a)", "(b,b)", "(a(a))", "(a(b))", "(b(a))", "(b(b))"]
        );
    }

    #[test]
    fn no_duplicates() {
        let p = Palette::letters(2).unwrap();
        let mut all = enumerate_trees(4, &p).unwrap();
        let n = all.len();
        all.sort();
        all.dedup();
        assert_eq!(all.len(), n);
    }
}
