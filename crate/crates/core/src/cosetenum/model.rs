use super::{CosetTable, COL_X, COL_Y};
use crate::grp::{Elem, GroupModel, ModelTag};

/// The regular permutation representation read off a complete coset table.
///
/// Element `c` is the group element whose coset is row `c`; it is
/// represented by the word along the breadth-first spanning tree. The
/// product `a·b` is the coset reached from `a` by following `b`'s word.
#[derive(Debug, Clone)]
pub struct CosetTableModel {
    table: CosetTable,
    /// Spanning tree: `(parent, column)` with `row(parent)[column] = c`.
    tree: Vec<(u32, u8)>,
    depth: Vec<u32>,
}

impl CosetTableModel {
    pub fn new(table: CosetTable) -> Self {
        let n = table.len();
        let mut tree = vec![(u32::MAX, 0u8); n];
        let mut depth = vec![u32::MAX; n];
        depth[0] = 0;
        tree[0] = (0, 0);
        let mut queue = std::collections::VecDeque::from([0u32]);
        while let Some(c) = queue.pop_front() {
            for col in 0..4 {
                let d = table.act(c, col);
                if depth[d as usize] == u32::MAX {
                    depth[d as usize] = depth[c as usize] + 1;
                    tree[d as usize] = (c, col as u8);
                    queue.push_back(d);
                }
            }
        }
        Self { table, tree, depth }
    }

    pub fn table(&self) -> &CosetTable {
        &self.table
    }

    fn path(&self, c: u32) -> Vec<u8> {
        let mut cols = Vec::with_capacity(self.depth[c as usize] as usize);
        let mut cur = c;
        while cur != 0 {
            let (p, col) = self.tree[cur as usize];
            cols.push(col);
            cur = p;
        }
        cols.reverse();
        cols
    }
}

impl GroupModel for CosetTableModel {
    fn tag(&self) -> ModelTag {
        ModelTag::CosetTable
    }

    fn order(&self) -> u64 {
        self.table.len() as u64
    }

    fn identity(&self) -> Elem {
        Elem(0)
    }

    fn mul(&self, a: Elem, b: Elem) -> Elem {
        let mut c = a.0;
        for col in self.path(b.0) {
            c = self.table.act(c, col as usize);
        }
        Elem(c)
    }

    fn inv(&self, a: Elem) -> Elem {
        let mut c = 0;
        for col in self.path(a.0).into_iter().rev() {
            c = self.table.act(c, (col ^ 1) as usize);
        }
        Elem(c)
    }

    fn gen_x(&self) -> Elem {
        Elem(self.table.act(0, COL_X))
    }

    fn gen_y(&self) -> Elem {
        Elem(self.table.act(0, COL_Y))
    }

    fn describe(&self, a: Elem) -> String {
        let letters: Vec<&str> = self
            .path(a.0)
            .into_iter()
            .map(|c| ["x", "X", "y", "Y"][c as usize])
            .collect();
        if letters.is_empty() {
            "1".into()
        } else {
            letters.join("")
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::{enumerate_cosets, Presentation};
    use crate::grp::{check_generates, element_order, GroupModel};

    #[test]
    fn a5_model_is_a_group() {
        let p: Presentation = "x^2\ny^3\nx y x y x y x y x y".parse().unwrap();
        let m = enumerate_cosets(&p, 10_000).unwrap().into_model().unwrap();
        assert_eq!(m.order(), 60);
        check_generates(&m).unwrap();
        assert_eq!(element_order(&m, m.gen_x()), 2);
        let xy = m.mul(m.gen_x(), m.gen_y());
        assert_eq!(element_order(&m, xy), 5);
        for a in (0..60).step_by(7) {
            let a = crate::grp::Elem(a);
            assert_eq!(m.mul(a, m.inv(a)), m.identity());
            for b in (0..60).step_by(11) {
                let b = crate::grp::Elem(b);
                for c in (0..60).step_by(13) {
                    let c = crate::grp::Elem(c);
                    assert_eq!(m.mul(m.mul(a, b), c), m.mul(a, m.mul(b, c)));
                }
            }
        }
    }
}
