//! Plain-text mesh and field I/O: ASCII OFF plus a one-value-per-line field
//! sidecar.

use std::fs;
use std::path::Path;

use crate::mesh::ScalarMesh;
use crate::IngestError;

fn io_error(path: &Path, source: std::io::Error) -> IngestError {
    IngestError::Io {
        path: path.display().to_string(),
        source,
    }
}

/// Significant lines of a plain-text file: `#` comments stripped, blank lines
/// skipped, 1-based line numbers kept for diagnostics.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            None
        } else {
            Some((i + 1, line))
        }
    })
}

/// Vertex positions and triangles parsed out of an OFF body.
type OffBody = (Vec<[f64; 3]>, Vec<[usize; 3]>);

/// Parses ASCII OFF text with triangular faces. Comments and blank lines are
/// skipped; trailing attributes on face lines (colors) are ignored; anything
/// else out of shape is a format error carrying `label` and a line number.
fn parse_off(label: &str, text: &str) -> Result<OffBody, IngestError> {
    let bad = |line: usize, message: String| IngestError::Format {
        file: label.to_string(),
        line,
        message,
    };
    let mut lines = significant_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| bad(1, "empty file; expected an OFF header".into()))?;
    if header != "OFF" {
        return Err(bad(line, format!("expected OFF header, found {header:?}")));
    }
    let (line, count_line) = lines
        .next()
        .ok_or_else(|| bad(line, "missing vertex/face/edge counts".into()))?;
    let counts: Vec<&str> = count_line.split_whitespace().collect();
    if counts.len() != 3 {
        return Err(bad(line, "expected three counts: vertices faces edges".into()));
    }
    let vertex_count: usize = counts[0]
        .parse()
        .map_err(|_| bad(line, format!("bad vertex count {:?}", counts[0])))?;
    let face_count: usize = counts[1]
        .parse()
        .map_err(|_| bad(line, format!("bad face count {:?}", counts[1])))?;
    let mut vertices = Vec::with_capacity(vertex_count);
    for _ in 0..vertex_count {
        let (line, text) = lines
            .next()
            .ok_or_else(|| bad(0, format!("expected {vertex_count} vertex lines")))?;
        let fields: Vec<&str> = text.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(bad(line, "expected exactly three coordinates".into()));
        }
        let mut p = [0.0; 3];
        for (slot, field) in p.iter_mut().zip(&fields) {
            *slot = field
                .parse()
                .map_err(|_| bad(line, format!("bad coordinate {field:?}")))?;
        }
        vertices.push(p);
    }
    let mut triangles = Vec::with_capacity(face_count);
    for _ in 0..face_count {
        let (line, text) = lines
            .next()
            .ok_or_else(|| bad(0, format!("expected {face_count} face lines")))?;
        let fields: Vec<&str> = text.split_whitespace().collect();
        let arity: usize = fields
            .first()
            .and_then(|f| f.parse().ok())
            .ok_or_else(|| bad(line, "face line must start with its vertex count".into()))?;
        if arity != 3 {
            return Err(bad(line, format!("only triangular faces are supported, found a {arity}-gon")));
        }
        if fields.len() < 4 {
            return Err(bad(line, "face line is missing vertex indices".into()));
        }
        let mut tri = [0usize; 3];
        for (slot, field) in tri.iter_mut().zip(&fields[1..4]) {
            *slot = field
                .parse()
                .map_err(|_| bad(line, format!("bad vertex index {field:?}")))?;
        }
        triangles.push(tri);
    }
    if let Some((line, _)) = lines.next() {
        return Err(bad(line, "trailing data after the last face".into()));
    }
    Ok((vertices, triangles))
}

/// Parses a field sidecar: one value per significant line.
fn parse_field(label: &str, text: &str) -> Result<Vec<f64>, IngestError> {
    let mut values = Vec::new();
    for (line, content) in significant_lines(text) {
        if content.split_whitespace().count() != 1 {
            return Err(IngestError::Format {
                file: label.to_string(),
                line,
                message: "expected exactly one value per line".into(),
            });
        }
        values.push(content.parse().map_err(|_| IngestError::Format {
            file: label.to_string(),
            line,
            message: format!("bad field value {content:?}"),
        })?);
    }
    Ok(values)
}

/// Parses an in-memory OFF body and field listing into a mesh. The labels
/// name the two sources in error messages; line numbers are relative to each
/// text. The result is structurally unchecked; run [`ScalarMesh::validate`]
/// (or any operation that does) before trusting it.
pub fn mesh_from_text(
    off_label: &str,
    off_text: &str,
    field_label: &str,
    field_text: &str,
) -> Result<ScalarMesh, IngestError> {
    let (vertices, triangles) = parse_off(off_label, off_text)?;
    let field = parse_field(field_label, field_text)?;
    if field.len() != vertices.len() {
        return Err(IngestError::FieldLength {
            vertices: vertices.len(),
            values: field.len(),
        });
    }
    Ok(ScalarMesh {
        vertices,
        triangles,
        field,
    })
}

/// Renders the mesh as an ASCII OFF body plus a one-value-per-line field
/// listing, the inverse of [`mesh_from_text`]. Numbers use the shortest
/// round-trippable decimal form, so a render/parse cycle reproduces the mesh
/// exactly and repeated renders are byte-identical.
pub fn mesh_to_text(mesh: &ScalarMesh) -> (String, String) {
    let mut off = String::from("OFF\n");
    off.push_str(&format!(
        "{} {} {}\n",
        mesh.vertex_count(),
        mesh.triangle_count(),
        mesh.edge_count()
    ));
    for p in &mesh.vertices {
        off.push_str(&format!("{} {} {}\n", p[0], p[1], p[2]));
    }
    for t in &mesh.triangles {
        off.push_str(&format!("3 {} {} {}\n", t[0], t[1], t[2]));
    }
    let mut field = String::new();
    for v in &mesh.field {
        field.push_str(&format!("{v}\n"));
    }
    (off, field)
}

/// Reads a mesh from an OFF file and its field from a sidecar file. The
/// result is structurally unchecked; run [`ScalarMesh::validate`] (or any
/// operation that does) before trusting it.
pub fn load_mesh(off_path: &Path, field_path: &Path) -> Result<ScalarMesh, IngestError> {
    let off_text = fs::read_to_string(off_path).map_err(|e| io_error(off_path, e))?;
    let field_text = fs::read_to_string(field_path).map_err(|e| io_error(field_path, e))?;
    mesh_from_text(
        &off_path.display().to_string(),
        &off_text,
        &field_path.display().to_string(),
        &field_text,
    )
}

/// Writes the mesh as ASCII OFF plus a field sidecar, the inverse of
/// [`load_mesh`]. See [`mesh_to_text`] for the determinism guarantees.
pub fn save_mesh(mesh: &ScalarMesh, off_path: &Path, field_path: &Path) -> Result<(), IngestError> {
    let (off, field) = mesh_to_text(mesh);
    fs::write(off_path, off).map_err(|e| io_error(off_path, e))?;
    fs::write(field_path, field).map_err(|e| io_error(field_path, e))?;
    Ok(())
}
