//! Structured triangular meshes of subregions (and rectangles).
//!
//! A quad grid is mapped through the curve parametrization and split into
//! triangle pairs; this keeps the anisotropy of thin domains under explicit
//! control without an external mesher.

use super::subregion::Subregion;
use crate::error::{Error, Result};
use crate::point::Point;
use crate::quad::triangle_area;
use std::fmt::Write as _;

/// Boundary tags of the subregion mesh.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum BoundaryTag {
    /// Left vertical cap.
    Gamma1,
    /// Right vertical cap.
    Gamma2,
    /// Top lateral arc.
    Gamma3,
    /// Bottom lateral arc.
    Gamma4,
}

impl BoundaryTag {
    pub fn index(self) -> usize {
        match self {
            BoundaryTag::Gamma1 => 1,
            BoundaryTag::Gamma2 => 2,
            BoundaryTag::Gamma3 => 3,
            BoundaryTag::Gamma4 => 4,
        }
    }

    pub fn from_index(i: usize) -> Option<Self> {
        match i {
            1 => Some(BoundaryTag::Gamma1),
            2 => Some(BoundaryTag::Gamma2),
            3 => Some(BoundaryTag::Gamma3),
            4 => Some(BoundaryTag::Gamma4),
            _ => None,
        }
    }
}

/// Boundary edge: node pair ordered so the domain lies to the left, plus the
/// outward unit normal.
#[derive(Debug, Clone, Copy)]
pub struct BoundaryEdge {
    pub nodes: [usize; 2],
    pub tag: BoundaryTag,
    pub normal: Point,
}

/// Triangular mesh with per-edge boundary tags.
#[derive(Debug, Clone)]
pub struct Mesh2D {
    pub nodes: Vec<Point>,
    /// Positively oriented node triples.
    pub triangles: Vec<[usize; 3]>,
    pub boundary_edges: Vec<BoundaryEdge>,
    /// Target mesh size used at construction.
    pub h: f64,
    /// Grid shape (columns of quads, rows of quads) of the structured build.
    grid: (usize, usize),
}

impl Mesh2D {
    /// Sum of triangle areas.
    pub fn area(&self) -> f64 {
        self.triangles
            .iter()
            .map(|t| triangle_area(self.nodes[t[0]], self.nodes[t[1]], self.nodes[t[2]]).abs())
            .sum()
    }

    /// Area of the polygonal boundary via the shoelace formula over the
    /// structured outline.
    pub fn polygon_area(&self) -> f64 {
        // walk the outer boundary: edges are consistently oriented with the
        // domain to the left, so the shoelace over all boundary edges gives
        // the enclosed area.
        let mut acc = 0.0;
        for e in &self.boundary_edges {
            let a = self.nodes[e.nodes[0]];
            let b = self.nodes[e.nodes[1]];
            acc += a.x * b.y - b.x * a.y;
        }
        0.5 * acc
    }

    pub fn max_edge_length(&self) -> f64 {
        let mut m: f64 = 0.0;
        for t in &self.triangles {
            for k in 0..3 {
                m = m.max(self.nodes[t[k]].dist(self.nodes[t[(k + 1) % 3]]));
            }
        }
        m
    }

    /// Longest-to-shortest edge ratio over all triangles.
    pub fn max_aspect_ratio(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for t in &self.triangles {
            let mut lo = f64::INFINITY;
            let mut hi: f64 = 0.0;
            for k in 0..3 {
                let l = self.nodes[t[k]].dist(self.nodes[t[(k + 1) % 3]]);
                lo = lo.min(l);
                hi = hi.max(l);
            }
            worst = worst.max(hi / lo);
        }
        worst
    }

    /// Edges carrying the given tag.
    pub fn tagged_edges(&self, tag: BoundaryTag) -> Vec<&BoundaryEdge> {
        self.boundary_edges.iter().filter(|e| e.tag == tag).collect()
    }

    /// Returns an error if no edge carries the tag.
    pub fn require_tag(&self, tag: BoundaryTag) -> Result<()> {
        if self.boundary_edges.iter().any(|e| e.tag == tag) {
            Ok(())
        } else {
            Err(Error::Tag(format!("{tag:?}")))
        }
    }

    /// Locate the triangle containing `p`; returns the triangle index and
    /// barycentric coordinates. Uses the structured layout as a seed and
    /// falls back to a linear scan.
    pub fn locate(&self, p: Point) -> Option<(usize, [f64; 3])> {
        let (nt, ns) = self.grid;
        let x_lo = self.nodes[0].x;
        let x_hi = self.nodes[self.nodes.len() - 1].x;
        if nt > 0 {
            let col =
                (((p.x - x_lo) / (x_hi - x_lo) * nt as f64).floor() as isize).clamp(0, nt as isize - 1)
                    as usize;
            for row in 0..ns {
                let quad = col * ns + row;
                for tri in [2 * quad, 2 * quad + 1] {
                    if let Some(b) = self.bary_if_inside(tri, p) {
                        return Some((tri, b));
                    }
                }
            }
        }
        (0..self.triangles.len()).find_map(|i| self.bary_if_inside(i, p).map(|b| (i, b)))
    }

    fn bary_if_inside(&self, tri: usize, p: Point) -> Option<[f64; 3]> {
        let [ia, ib, ic] = self.triangles[tri];
        let (a, b, c) = (self.nodes[ia], self.nodes[ib], self.nodes[ic]);
        let area = triangle_area(a, b, c);
        let wa = triangle_area(p, b, c) / area;
        let wb = triangle_area(a, p, c) / area;
        let wc = 1.0 - wa - wb;
        let tol = -1e-12;
        if wa >= tol && wb >= tol && wc >= tol {
            Some([wa, wb, wc])
        } else {
            None
        }
    }

    /// Plain-text export: header `nodes N elements M`, then N lines `x y`,
    /// then M lines `i j k t1 t2 t3` where `t_e` tags the edge opposite to
    /// vertex e (0 = interior, 1..4 = Gamma1..Gamma4).
    pub fn export_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(
            out,
            "nodes {} elements {}",
            self.nodes.len(),
            self.triangles.len()
        );
        for n in &self.nodes {
            let _ = writeln!(out, "{:.17e} {:.17e}", n.x, n.y);
        }
        // edge -> tag lookup
        use std::collections::HashMap;
        let mut tags: HashMap<(usize, usize), usize> = HashMap::new();
        for e in &self.boundary_edges {
            let key = (e.nodes[0].min(e.nodes[1]), e.nodes[0].max(e.nodes[1]));
            tags.insert(key, e.tag.index());
        }
        for t in &self.triangles {
            let edge_tag = |a: usize, b: usize| -> usize {
                *tags.get(&(a.min(b), a.max(b))).unwrap_or(&0)
            };
            let _ = writeln!(
                out,
                "{} {} {} {} {} {}",
                t[0],
                t[1],
                t[2],
                edge_tag(t[1], t[2]),
                edge_tag(t[2], t[0]),
                edge_tag(t[0], t[1]),
            );
        }
        out
    }
}

/// Mesh the subregion with target size `h <= eps/4` (at least four node
/// layers across the thickness).
pub fn mesh_subregion(sub: &Subregion, h: f64) -> Result<Mesh2D> {
    let eps = sub.eps();
    if h > eps / 4.0 {
        return Err(Error::Mesh(format!(
            "mesh size {h} too coarse: need h <= eps/4 = {}",
            eps / 4.0
        )));
    }
    let (x_lo, x_hi) = sub.x1_range();
    let len = x_hi - x_lo;
    let nt = (len / h).ceil() as usize;
    let ns = (eps / h).ceil() as usize;
    build_structured(
        nt,
        ns,
        |i| x_lo + len * i as f64 / nt as f64,
        |x1, j| {
            let bottom = sub.bottom(x1);
            bottom + eps * j as f64 / ns as f64
        },
        h,
    )
}

/// Mesh an axis-aligned rectangle [x0, x1] x [y0, y1]; tags follow the
/// subregion convention (left, right, top, bottom).
pub fn mesh_rect(x_range: (f64, f64), y_range: (f64, f64), h: f64) -> Result<Mesh2D> {
    if h <= 0.0 {
        return Err(Error::Mesh("mesh size must be positive".into()));
    }
    let (x0, x1) = x_range;
    let (y0, y1) = y_range;
    let nt = ((x1 - x0) / h).ceil() as usize;
    let ns = ((y1 - y0) / h).ceil() as usize;
    build_structured(
        nt,
        ns,
        |i| x0 + (x1 - x0) * i as f64 / nt as f64,
        |_x, j| y0 + (y1 - y0) * j as f64 / ns as f64,
        h,
    )
}

fn build_structured(
    nt: usize,
    ns: usize,
    x_of: impl Fn(usize) -> f64,
    y_of: impl Fn(f64, usize) -> f64,
    h: f64,
) -> Result<Mesh2D> {
    if nt == 0 || ns == 0 {
        return Err(Error::Mesh("degenerate grid".into()));
    }
    let mut nodes = Vec::with_capacity((nt + 1) * (ns + 1));
    for i in 0..=nt {
        let x = x_of(i);
        for j in 0..=ns {
            nodes.push(Point::new(x, y_of(x, j)));
        }
    }
    let id = |i: usize, j: usize| i * (ns + 1) + j;
    let mut triangles = Vec::with_capacity(2 * nt * ns);
    for i in 0..nt {
        for j in 0..ns {
            // lower-left split; both triangles positively oriented
            triangles.push([id(i, j), id(i + 1, j), id(i + 1, j + 1)]);
            triangles.push([id(i, j), id(i + 1, j + 1), id(i, j + 1)]);
        }
    }
    let mut boundary_edges = Vec::new();
    for j in 0..ns {
        // left cap, domain to the left going downward
        let (a, b) = (id(0, j + 1), id(0, j));
        boundary_edges.push(BoundaryEdge {
            nodes: [a, b],
            tag: BoundaryTag::Gamma1,
            normal: outward_normal(nodes[a], nodes[b]),
        });
        let (a, b) = (id(nt, j), id(nt, j + 1));
        boundary_edges.push(BoundaryEdge {
            nodes: [a, b],
            tag: BoundaryTag::Gamma2,
            normal: outward_normal(nodes[a], nodes[b]),
        });
    }
    for i in 0..nt {
        let (a, b) = (id(i + 1, ns), id(i, ns));
        boundary_edges.push(BoundaryEdge {
            nodes: [a, b],
            tag: BoundaryTag::Gamma3,
            normal: outward_normal(nodes[a], nodes[b]),
        });
        let (a, b) = (id(i, 0), id(i + 1, 0));
        boundary_edges.push(BoundaryEdge {
            nodes: [a, b],
            tag: BoundaryTag::Gamma4,
            normal: outward_normal(nodes[a], nodes[b]),
        });
    }
    let mesh = Mesh2D {
        nodes,
        triangles,
        boundary_edges,
        h,
        grid: (nt, ns),
    };
    for t in &mesh.triangles {
        let a = triangle_area(mesh.nodes[t[0]], mesh.nodes[t[1]], mesh.nodes[t[2]]);
        if a <= 0.0 {
            return Err(Error::Mesh(format!("non-positive triangle area {a}")));
        }
    }
    let ratio = mesh.max_aspect_ratio();
    if ratio > 20.0 {
        return Err(Error::Mesh(format!(
            "triangle aspect ratio {ratio:.2} exceeds the thin-domain cap 20"
        )));
    }
    let (pa, ta) = (mesh.polygon_area(), mesh.area());
    if ((pa - ta) / pa).abs() > 1e-12 {
        return Err(Error::Mesh(format!(
            "triangulated area {ta} disagrees with polygon area {pa}"
        )));
    }
    Ok(mesh)
}

/// Outward normal for a boundary edge oriented with the domain on its left.
fn outward_normal(a: Point, b: Point) -> Point {
    let t = (b - a).normalized();
    Point::new(t.y, -t.x)
}
