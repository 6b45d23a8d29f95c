//! Placement serialization: JSON documents and SVG drawings.

use std::fmt::Write;

use serde::{Deserialize, Serialize};

use super::{DiskSet, GeometryError, Placement, Point, RectRegion};

/// On-disk form of a placement together with the radii it indexes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlacementDoc {
    pub region: RectRegion,
    pub disks: Vec<f64>,
    /// `[index, x, y]` triples; the index is stored as a number.
    pub centers: Vec<[f64; 3]>,
}

pub fn placement_to_json(p: &Placement, disks: &DiskSet) -> String {
    let doc = PlacementDoc {
        region: p.region,
        disks: disks.radii().to_vec(),
        centers: p.items.iter().map(|&(i, c)| [i as f64, c.x, c.y]).collect(),
    };
    serde_json::to_string_pretty(&doc).expect("placement serializes")
}

#[derive(Debug, thiserror::Error)]
pub enum PlacementParseError {
    #[error("malformed placement json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Geometry(#[from] GeometryError),
    #[error("center entry {0} has a non-integral or negative index")]
    BadIndex(usize),
}

/// Parses a placement document. The radii are sorted on load, so the stored
/// radii must already be non-increasing for indices to keep their meaning.
pub fn placement_from_json(text: &str) -> Result<(Placement, DiskSet), PlacementParseError> {
    let doc: PlacementDoc = serde_json::from_str(text)?;
    let region = RectRegion::new(doc.region.x, doc.region.y, doc.region.w, doc.region.h)?;
    let sorted = doc.disks.windows(2).all(|p| p[0] >= p[1]);
    let disks = DiskSet::new(doc.disks.clone())?;
    // Remap indices if the document listed radii in another order.
    let order: Vec<usize> = if sorted {
        (0..doc.disks.len()).collect()
    } else {
        let mut idx: Vec<usize> = (0..doc.disks.len()).collect();
        idx.sort_by(|&a, &b| doc.disks[b].total_cmp(&doc.disks[a]));
        let mut inv = vec![0; idx.len()];
        for (pos, &orig) in idx.iter().enumerate() {
            inv[orig] = pos;
        }
        inv
    };
    let mut p = Placement::new(region);
    for (k, c) in doc.centers.iter().enumerate() {
        let i = c[0];
        if !(i >= 0.0 && i.fract() == 0.0 && (i as usize) < order.len()) {
            return Err(PlacementParseError::BadIndex(k));
        }
        p.items.push((order[i as usize], Point::new(c[1], c[2])));
    }
    Ok((p, disks))
}

/// Draws the region outline, translucent disks and an optional witness point.
pub fn placement_to_svg(p: &Placement, disks: &DiskSet, witness: Option<Point>) -> String {
    let r = p.region;
    let pad = 0.05 * r.w.max(r.h);
    let (minx, miny, maxx, maxy) = p.items.iter().fold(
        (r.x - pad, r.y - pad, r.x + r.w + pad, r.y + r.h + pad),
        |(a, b, c, d), &(i, q)| {
            let rad = disks.radius(i);
            (a.min(q.x - rad), b.min(q.y - rad), c.max(q.x + rad), d.max(q.y + rad))
        },
    );
    let scale = 800.0 / (maxx - minx).max(maxy - miny);
    let tx = |x: f64| (x - minx) * scale;
    // SVG y grows downward.
    let ty = |y: f64| (maxy - y) * scale;
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{:.3}" height="{:.3}" viewBox="0 0 {:.3} {:.3}">"#,
        (maxx - minx) * scale,
        (maxy - miny) * scale,
        (maxx - minx) * scale,
        (maxy - miny) * scale
    );
    for &(i, q) in &p.items {
        let _ = writeln!(
            s,
            r#"  <circle cx="{:.6}" cy="{:.6}" r="{:.6}" fill="steelblue" fill-opacity="0.25" stroke="steelblue" stroke-width="1"/>"#,
            tx(q.x),
            ty(q.y),
            disks.radius(i) * scale
        );
    }
    let _ = writeln!(
        s,
        r#"  <rect x="{:.6}" y="{:.6}" width="{:.6}" height="{:.6}" fill="none" stroke="black" stroke-width="2"/>"#,
        tx(r.x),
        ty(r.y + r.h),
        r.w * scale,
        r.h * scale
    );
    if let Some(w) = witness {
        let _ = writeln!(s, r#"  <circle cx="{:.6}" cy="{:.6}" r="4" fill="red"/>"#, tx(w.x), ty(w.y));
    }
    s.push_str("</svg>\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> (Placement, DiskSet) {
        let d = DiskSet::new(vec![0.8, 0.3]).unwrap();
        let mut p = Placement::new(RectRegion::unit(1.2));
        p.items.push((0, Point::new(0.5, 0.5)));
        p.items.push((1, Point::new(1.0, 0.2)));
        (p, d)
    }

    #[test]
    fn json_round_trip() {
        let (p, d) = sample();
        let text = placement_to_json(&p, &d);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        for key in ["x", "y", "w", "h"] {
            assert!(v["region"][key].is_number());
        }
        assert_eq!(v["centers"][1][0], 1.0);
        let (q, e) = placement_from_json(&text).unwrap();
        assert_eq!(p, q);
        assert_eq!(d, e);
    }

    #[test]
    fn unsorted_radii_are_remapped() {
        let text = r#"{"region":{"x":0,"y":0,"w":1,"h":1},"disks":[0.3,0.8],"centers":[[1,0.5,0.5]]}"#;
        let (p, d) = placement_from_json(text).unwrap();
        assert_eq!(d.radius(p.items[0].0), 0.8);
    }

    #[test]
    fn svg_lists_every_disk() {
        let (p, d) = sample();
        let s = placement_to_svg(&p, &d, Some(Point::new(0.0, 0.0)));
        assert!(s.starts_with("<svg"));
        assert!(s.trim_end().ends_with("</svg>"));
        assert_eq!(s.matches("<circle").count(), 3);
        assert_eq!(s.matches("<rect").count(), 1);
    }
}
