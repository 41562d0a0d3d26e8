//! Binary trees with black and white nodes in which no node has the same
//! color as its right child.
//!
//! Text form: `node := color '(' node? ',' node? ')'` with `color` one of
//! `B`, `W`; the empty tree is the empty string. The parser also accepts
//! `B()` for a leaf.

use alloc::boxed::Box;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// Node color.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Black node.
    Black,
    /// White node.
    White,
}

impl Color {
    /// The other color.
    pub fn flip(self) -> Color {
        match self {
            Color::Black => Color::White,
            Color::White => Color::Black,
        }
    }

    fn letter(self) -> char {
        match self {
            Color::Black => 'B',
            Color::White => 'W',
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
struct Node {
    color: Color,
    left: BwTree,
    right: BwTree,
}

/// A possibly empty black/white binary tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BwTree(Option<Box<Node>>);

impl BwTree {
    /// The empty tree.
    pub fn empty() -> Self {
        Self(None)
    }

    /// Tree with a root of `color` over `left` and `right`. Fails when the
    /// right subtree's root has the same color.
    pub fn join(color: Color, left: BwTree, right: BwTree) -> Result<Self> {
        if right.root_color() == Some(color) {
            return Err(Error::RightChildClash);
        }
        Ok(Self::join_unchecked(color, left, right))
    }

    fn join_unchecked(color: Color, left: BwTree, right: BwTree) -> Self {
        Self(Some(Box::new(Node { color, left, right })))
    }

    /// True for the empty tree.
    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }

    /// Color of the root, if any.
    pub fn root_color(&self) -> Option<Color> {
        self.0.as_ref().map(|n| n.color)
    }

    /// Left subtree (empty for the empty tree).
    pub fn left(&self) -> Option<&BwTree> {
        self.0.as_ref().map(|n| &n.left)
    }

    /// Right subtree.
    pub fn right(&self) -> Option<&BwTree> {
        self.0.as_ref().map(|n| &n.right)
    }

    /// Splits into root color, left and right subtrees.
    pub fn into_parts(self) -> Option<(Color, BwTree, BwTree)> {
        self.0.map(|n| {
            let Node { color, left, right } = *n;
            (color, left, right)
        })
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        self.0.as_ref().map_or(0, |n| 1 + n.left.size() + n.right.size())
    }

    /// Number of nodes of the given color.
    pub fn count_color(&self, color: Color) -> usize {
        self.0.as_ref().map_or(0, |n| {
            usize::from(n.color == color) + n.left.count_color(color) + n.right.count_color(color)
        })
    }

    /// Number of black nodes.
    pub fn black_count(&self) -> usize {
        self.count_color(Color::Black)
    }

    /// Colors along the leftmost branch, root first.
    pub fn leftmost_branch_colors(&self) -> Vec<Color> {
        let mut out = Vec::new();
        let mut cur = self;
        while let Some(n) = &cur.0 {
            out.push(n.color);
            cur = &n.left;
        }
        out
    }

    /// Checks right-child alternation everywhere.
    pub fn validate(&self) -> Result<()> {
        match &self.0 {
            None => Ok(()),
            Some(n) => {
                if n.right.root_color() == Some(n.color) {
                    return Err(Error::RightChildClash);
                }
                n.left.validate()?;
                n.right.validate()
            }
        }
    }

    /// Swaps every color. Maps valid trees to valid trees.
    pub fn color_swap(&self) -> BwTree {
        match &self.0 {
            None => BwTree::empty(),
            Some(n) => BwTree::join_unchecked(n.color.flip(), n.left.color_swap(), n.right.color_swap()),
        }
    }

    /// Every valid tree with `size` nodes.
    pub fn all(size: usize) -> Vec<BwTree> {
        let mut by_size: Vec<Vec<BwTree>> = vec![vec![BwTree::empty()]];
        for m in 1..=size {
            let mut trees = Vec::new();
            for color in [Color::White, Color::Black] {
                for i in 0..m {
                    for l in &by_size[i] {
                        for r in &by_size[m - 1 - i] {
                            if r.root_color() != Some(color) {
                                trees.push(BwTree::join_unchecked(color, l.clone(), r.clone()));
                            }
                        }
                    }
                }
            }
            by_size.push(trees);
        }
        by_size.swap_remove(size)
    }
}

impl fmt::Display for BwTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            None => Ok(()),
            Some(n) => write!(f, "{}({},{})", n.color.letter(), n.left, n.right),
        }
    }
}

impl FromStr for BwTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bytes: Vec<u8> = s.bytes().filter(|b| !b.is_ascii_whitespace()).collect();
        let mut parser = Parser { text: &bytes, pos: 0 };
        let tree = parser.node()?;
        if parser.pos != bytes.len() {
            return Err(Error::Parse(alloc::format!("trailing input at offset {}", parser.pos)));
        }
        tree.validate()?;
        Ok(tree)
    }
}

struct Parser<'a> {
    text: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.text.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<()> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(alloc::format!("expected {:?} at offset {}", c as char, self.pos)))
        }
    }

    /// Parses an optional node; absent means the empty tree.
    fn node(&mut self) -> Result<BwTree> {
        let color = match self.peek() {
            Some(b'B') => Color::Black,
            Some(b'W') => Color::White,
            _ => return Ok(BwTree::empty()),
        };
        self.pos += 1;
        self.expect(b'(')?;
        let left = self.node()?;
        let right = if self.peek() == Some(b',') {
            self.pos += 1;
            self.node()?
        } else {
            BwTree::empty()
        };
        self.expect(b')')?;
        Ok(BwTree::join_unchecked(color, left, right))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    /// The 14-node tree drawn for the ascent-preserving map.
    const FIGURE_TREE: &str = "W(W(B(W(B(,),B(,W(B(,),B(,)))),W(,)),),B(B(,),W(W(,),)))";

    #[test]
    fn figure_tree() {
        let t: BwTree = FIGURE_TREE.parse().unwrap();
        assert_eq!(t.size(), 14);
        assert_eq!(t.black_count(), 7);
        assert_eq!(
            t.leftmost_branch_colors(),
            vec![Color::White, Color::White, Color::Black, Color::White, Color::Black]
        );
        assert_eq!(t.to_string(), FIGURE_TREE);
    }

    #[test]
    fn small_trees() {
        let w: BwTree = "W(,)".parse().unwrap();
        assert_eq!(w.black_count(), 0);
        assert_eq!("W()".parse::<BwTree>().unwrap(), w);
        assert_eq!("W(,W(,))".parse::<BwTree>(), Err(Error::RightChildClash));
        assert_eq!(
            BwTree::join(Color::White, BwTree::empty(), w.clone()),
            Err(Error::RightChildClash)
        );
        assert!(BwTree::join(Color::Black, w.clone(), w).is_ok());
        assert!("W(".parse::<BwTree>().is_err());
        assert!("X(,)".parse::<BwTree>().is_err());
        assert!("W(,)B(,)".parse::<BwTree>().is_err());
        assert_eq!("".parse::<BwTree>().unwrap(), BwTree::empty());
    }

    #[test]
    fn counts_and_color_symmetry() {
        let r = [1usize, 2, 6, 22, 90, 394, 1806, 8558, 41586];
        for (n, &rn) in r.iter().enumerate() {
            let all = BwTree::all(n);
            assert_eq!(all.len(), rn, "n = {n}");
            let mut black = vec![0usize; n + 1];
            let mut white = vec![0usize; n + 1];
            for t in &all {
                assert!(t.validate().is_ok());
                assert_eq!(t.size(), n);
                black[t.black_count()] += 1;
                white[t.count_color(Color::White)] += 1;
                assert!(t.color_swap().validate().is_ok());
            }
            assert_eq!(black, white);
        }
    }

    #[test]
    fn text_round_trip() {
        for t in BwTree::all(5) {
            assert_eq!(t.to_string().parse::<BwTree>().unwrap(), t);
        }
    }
}
