//! Study domains, conforming triangulations and uniform midpoint
//! refinement.
//!
//! Meshes are immutable after construction. Edges carry stable global
//! identities ordered by their sorted vertex pair (lower index first),
//! which fixes the orientation used for shared edge unknowns.

use crate::polytools::{triangle_diameter, triangle_signed_area};
use std::collections::BTreeMap;
use std::io::Write;

/// The three study domains.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DomainId {
    /// (0,1)^2
    UnitSquare,
    /// (-1,1)^2
    BigSquare,
    /// Non-convex pentagon with vertices
    /// (0,0), (2,0), (1,1), (1,2), (0,2).
    LShape,
}

impl DomainId {
    pub fn name(&self) -> &'static str {
        match self {
            DomainId::UnitSquare => "unit-square",
            DomainId::BigSquare => "big-square",
            DomainId::LShape => "l-shape",
        }
    }
}

/// An undirected mesh edge. `v[0] < v[1]` always; the oriented edge
/// parameterization runs from `v[0]` to `v[1]`.
#[derive(Debug, Clone)]
pub struct Edge {
    pub v: [usize; 2],
    pub boundary: bool,
    /// Incident triangle indices (1 for boundary edges, 2 for interior).
    pub tris: Vec<usize>,
}

/// Conforming triangulation with explicit edge table.
#[derive(Debug, Clone)]
pub struct TriMesh {
    pub domain: DomainId,
    pub level: u32,
    pub vertices: Vec<[f64; 2]>,
    /// Vertex index triples, counterclockwise.
    pub triangles: Vec<[usize; 3]>,
    pub edges: Vec<Edge>,
    /// For each triangle, the global edge index of local edge l, where
    /// local edge l connects local vertices (l, (l+1) mod 3).
    pub tri_edges: Vec<[usize; 3]>,
    /// Per-triangle diameter (longest edge length).
    pub h_tri: Vec<f64>,
    /// Global mesh size: max of `h_tri`.
    pub h: f64,
}

/// Per-element geometric data: area, diameter, outward unit normals per
/// local edge, centroid and edge lengths.
#[derive(Debug, Clone, Copy)]
pub struct ElementGeometry {
    pub area: f64,
    pub diameter: f64,
    pub centroid: [f64; 2],
    /// Outward unit normal of local edge l = (v_l, v_{l+1}).
    pub normals: [[f64; 2]; 3],
    pub edge_lengths: [f64; 3],
}

impl TriMesh {
    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn n_triangles(&self) -> usize {
        self.triangles.len()
    }

    pub fn tri_coords(&self, t: usize) -> [[f64; 2]; 3] {
        let [a, b, c] = self.triangles[t];
        [self.vertices[a], self.vertices[b], self.vertices[c]]
    }

    /// Vertex indices of local edge l of triangle t, in triangle order
    /// (not necessarily global edge order).
    pub fn local_edge_vertices(&self, t: usize, l: usize) -> [usize; 2] {
        let tri = self.triangles[t];
        [tri[l], tri[(l + 1) % 3]]
    }

    /// Endpoints of global edge e in its fixed orientation.
    pub fn edge_endpoints(&self, e: usize) -> ([f64; 2], [f64; 2]) {
        let ed = &self.edges[e];
        (self.vertices[ed.v[0]], self.vertices[ed.v[1]])
    }

    pub fn edge_length(&self, e: usize) -> f64 {
        let (p0, p1) = self.edge_endpoints(e);
        ((p1[0] - p0[0]).powi(2) + (p1[1] - p0[1]).powi(2)).sqrt()
    }

    /// Plain-text debug dump: header "V E F", then vertex lines "x y",
    /// then triangle lines "i j k" (0-based).
    pub fn dump<W: Write>(&self, w: &mut W) -> std::io::Result<()> {
        writeln!(
            w,
            "{} {} {}",
            self.n_vertices(),
            self.n_edges(),
            self.n_triangles()
        )?;
        for v in &self.vertices {
            writeln!(w, "{} {}", v[0], v[1])?;
        }
        for t in &self.triangles {
            writeln!(w, "{} {} {}", t[0], t[1], t[2])?;
        }
        Ok(())
    }

    /// Conformity and orientation scan. Returns a description of the first
    /// violation, if any.
    pub fn validate(&self) -> Result<(), String> {
        for (t, _) in self.triangles.iter().enumerate() {
            let area = triangle_signed_area(&self.tri_coords(t));
            if area <= 0.0 {
                return Err(format!("triangle {t} not counterclockwise (area {area})"));
            }
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if edge.v[0] >= edge.v[1] {
                return Err(format!("edge {e} not sorted"));
            }
            let n = edge.tris.len();
            if edge.boundary && n != 1 {
                return Err(format!("boundary edge {e} has {n} incident triangles"));
            }
            if !edge.boundary && n != 2 {
                return Err(format!("interior edge {e} has {n} incident triangles"));
            }
        }
        let (v, e, f) = (self.n_vertices(), self.n_edges(), self.n_triangles());
        if v + f != e + 1 {
            return Err(format!("Euler relation violated: V={v} E={e} F={f}"));
        }
        for (t, edges) in self.tri_edges.iter().enumerate() {
            for (l, &ge) in edges.iter().enumerate() {
                let lv = self.local_edge_vertices(t, l);
                let mut sorted = lv;
                sorted.sort_unstable();
                if self.edges[ge].v != sorted {
                    return Err(format!("triangle {t} local edge {l} mismatched"));
                }
            }
        }
        Ok(())
    }
}

/// Rebuild the edge table from the triangle list. Edge order is the sorted
/// order of the (min,max) vertex pairs, which is deterministic.
fn build_edges(n_vertices: usize, triangles: &[[usize; 3]]) -> (Vec<Edge>, Vec<[usize; 3]>) {
    let mut map: BTreeMap<[usize; 2], Vec<usize>> = BTreeMap::new();
    for (t, tri) in triangles.iter().enumerate() {
        for l in 0..3 {
            let a = tri[l];
            let b = tri[(l + 1) % 3];
            assert!(a < n_vertices && b < n_vertices && a != b);
            let key = [a.min(b), a.max(b)];
            map.entry(key).or_default().push(t);
        }
    }
    let mut edges = Vec::with_capacity(map.len());
    let mut index: BTreeMap<[usize; 2], usize> = BTreeMap::new();
    for (key, tris) in map {
        index.insert(key, edges.len());
        edges.push(Edge {
            v: key,
            boundary: tris.len() == 1,
            tris,
        });
    }
    let tri_edges = triangles
        .iter()
        .map(|tri| {
            [0, 1, 2].map(|l| {
                let a = tri[l];
                let b = tri[(l + 1) % 3];
                index[&[a.min(b), a.max(b)]]
            })
        })
        .collect();
    (edges, tri_edges)
}

fn finish_mesh(
    domain: DomainId,
    level: u32,
    vertices: Vec<[f64; 2]>,
    triangles: Vec<[usize; 3]>,
) -> TriMesh {
    let (edges, tri_edges) = build_edges(vertices.len(), &triangles);
    let h_tri: Vec<f64> = (0..triangles.len())
        .map(|t| {
            let [a, b, c] = triangles[t];
            triangle_diameter(&[vertices[a], vertices[b], vertices[c]])
        })
        .collect();
    let h = h_tri.iter().cloned().fold(0.0, f64::max);
    TriMesh {
        domain,
        level,
        vertices,
        triangles,
        edges,
        tri_edges,
        h_tri,
        h,
    }
}

/// Level-0 coarse mesh of the given domain.
///
/// - UnitSquare: 2 triangles split by the diagonal (0,0)-(1,1).
/// - BigSquare: 8 triangles, one unit square per quadrant, each split by
///   the diagonal toward the origin. Both axes are mesh lines, so the
///   piecewise coefficients of the discontinuous test problems are smooth
///   on every element at every level.
/// - LShape: a 3-triangle fan from the corner (0,0).
pub fn build_initial(domain: DomainId) -> TriMesh {
    let (vertices, triangles): (Vec<[f64; 2]>, Vec<[usize; 3]>) = match domain {
        DomainId::UnitSquare => (
            vec![[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]],
            vec![[0, 1, 2], [0, 2, 3]],
        ),
        DomainId::BigSquare => {
            let vertices = vec![
                [-1.0, -1.0],
                [0.0, -1.0],
                [1.0, -1.0],
                [-1.0, 0.0],
                [0.0, 0.0],
                [1.0, 0.0],
                [-1.0, 1.0],
                [0.0, 1.0],
                [1.0, 1.0],
            ];
            // Each quadrant square split by its diagonal through the
            // origin (vertex 4).
            let triangles = vec![
                [0, 1, 4],
                [0, 4, 3],
                [1, 2, 5],
                [1, 5, 4],
                [3, 4, 7],
                [3, 7, 6],
                [4, 5, 8],
                [4, 8, 7],
            ];
            (vertices, triangles)
        }
        DomainId::LShape => (
            vec![[0.0, 0.0], [2.0, 0.0], [1.0, 1.0], [1.0, 2.0], [0.0, 2.0]],
            vec![[0, 1, 2], [0, 2, 3], [0, 3, 4]],
        ),
    };
    let mesh = finish_mesh(domain, 0, vertices, triangles);
    debug_assert!(mesh.validate().is_ok());
    mesh
}

/// Uniform refinement: each triangle is split into four congruent
/// sub-triangles through its edge midpoints. The midpoint of edge e gets
/// vertex index `old_V + e`.
pub fn refine_uniform(mesh: &TriMesh) -> TriMesh {
    let old_v = mesh.n_vertices();
    let mut vertices = mesh.vertices.clone();
    vertices.extend(mesh.edges.iter().map(|e| {
        let a = mesh.vertices[e.v[0]];
        let b = mesh.vertices[e.v[1]];
        [0.5 * (a[0] + b[0]), 0.5 * (a[1] + b[1])]
    }));
    let mut triangles = Vec::with_capacity(4 * mesh.n_triangles());
    for t in 0..mesh.n_triangles() {
        let [a, b, c] = mesh.triangles[t];
        let [eab, ebc, eca] = mesh.tri_edges[t];
        let (mab, mbc, mca) = (old_v + eab, old_v + ebc, old_v + eca);
        triangles.push([a, mab, mca]);
        triangles.push([b, mbc, mab]);
        triangles.push([c, mca, mbc]);
        triangles.push([mab, mbc, mca]);
    }
    let out = finish_mesh(mesh.domain, mesh.level + 1, vertices, triangles);
    debug_assert!(out.validate().is_ok());
    out
}

/// Geometry of element `t`: area, diameter, outward unit normals per
/// local edge, centroid, edge lengths.
pub fn geometry(mesh: &TriMesh, t: usize) -> ElementGeometry {
    let coords = mesh.tri_coords(t);
    let area = triangle_signed_area(&coords);
    assert!(area > 0.0, "element {t} is not counterclockwise");
    let centroid = [
        (coords[0][0] + coords[1][0] + coords[2][0]) / 3.0,
        (coords[0][1] + coords[1][1] + coords[2][1]) / 3.0,
    ];
    let mut normals = [[0.0; 2]; 3];
    let mut edge_lengths = [0.0; 3];
    for l in 0..3 {
        let p = coords[l];
        let q = coords[(l + 1) % 3];
        let dx = q[0] - p[0];
        let dy = q[1] - p[1];
        let len = (dx * dx + dy * dy).sqrt();
        // For a counterclockwise triangle, (dy, -dx) points outward.
        normals[l] = [dy / len, -dx / len];
        edge_lengths[l] = len;
    }
    ElementGeometry {
        area,
        diameter: triangle_diameter(&coords),
        centroid,
        normals,
        edge_lengths,
    }
}
