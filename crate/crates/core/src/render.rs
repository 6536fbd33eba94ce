//! ASCII pictures of paths.

use std::collections::HashSet;

use crate::path::{DyckPath, Letter};

/// One row per height `y = n, …, 0`, one column per `x = 0, …, kn`.
///
/// `*` marks a lattice point on the path, `/` a point on the diagonal the
/// path does not touch, `.` anything else.
pub fn render_path(path: &DyckPath) -> String {
    let params = path.params();
    let (k, n) = (params.k(), params.n());
    let mut visited = HashSet::with_capacity(path.len() + 1);
    let (mut x, mut y) = (0usize, 0usize);
    visited.insert((x, y));
    for &step in path.steps() {
        match step {
            Letter::S => y += 1,
            Letter::W => x += 1,
        }
        visited.insert((x, y));
    }

    let mut out = String::with_capacity((k * n + 2) * (n + 1));
    for row in (0..=n).rev() {
        for col in 0..=k * n {
            let c = if visited.contains(&(col, row)) {
                '*'
            } else if col == k * row {
                '/'
            } else {
                '.'
            };
            out.push(c);
        }
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::path::PathParams;

    #[test]
    fn renders_small_paths() {
        let path = DyckPath::parse("SWW", PathParams::new(2, 1).unwrap()).unwrap();
        assert_eq!(render_path(&path), "***\n*..\n");
        let path = DyckPath::parse("SWSW", PathParams::new(1, 2).unwrap()).unwrap();
        assert_eq!(render_path(&path), ".**\n**.\n*..\n");
    }
}
