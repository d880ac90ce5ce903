//! Exact invariants on a few classic graphs.

use zdlattice::graph::{maximum_clique, GraphInvariants, SimpleGraph};

fn main() {
    let petersen = SimpleGraph::from_edges(
        10,
        &[
            (0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
            (0, 5), (1, 6), (2, 7), (3, 8), (4, 9),
            (5, 7), (7, 9), (9, 6), (6, 8), (8, 5),
        ],
    );
    // two triangles joined by a path
    let barbell = SimpleGraph::from_edges(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);

    for (name, g) in [("petersen", &petersen), ("barbell", &barbell)] {
        let inv = GraphInvariants::of(g);
        println!(
            "{name}: n={} m={} diam={} girth={} ω={} χ={} max clique {:?}",
            inv.vertex_count,
            inv.edge_count,
            inv.diameter,
            inv.girth,
            inv.clique_number,
            inv.chromatic_number,
            maximum_clique(g)
        );
        println!("  cut vertices {:?}, bridges {:?}", inv.cut_vertices, inv.bridges);
        println!("  core vertices {:?}", inv.core_vertices);
    }
}
