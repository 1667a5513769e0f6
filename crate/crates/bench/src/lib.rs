//! Inputs shared by the benchmarks.

use walkgroup::{Graph, Walk};

/// The `k`-fold square grid on `{0..=k}²` with labels `(x,y)`.
pub fn square_grid(k: usize) -> Graph {
    let label = |x: usize, y: usize| format!("({x},{y})");
    let mut vertices = Vec::new();
    let mut edges = Vec::new();
    for x in 0..=k {
        for y in 0..=k {
            vertices.push(label(x, y));
            if x < k {
                edges.push((label(x, y), label(x + 1, y)));
            }
            if y < k {
                edges.push((label(x, y), label(x, y + 1)));
            }
        }
    }
    Graph::new(vertices, edges).expect("grid is simple")
}

/// The boundary of the grid as a closed walk at `(0,0)`.
pub fn grid_boundary(g: &Graph, k: usize) -> Walk {
    let mut labels = Vec::new();
    labels.extend((0..k).map(|y| format!("(0,{y})")));
    labels.extend((0..k).map(|x| format!("({x},{k})")));
    labels.extend((1..=k).rev().map(|y| format!("({k},{y})")));
    labels.extend((0..=k).rev().map(|x| format!("({x},0)")));
    Walk::from_labels(g, &labels).expect("boundary is a walk")
}
