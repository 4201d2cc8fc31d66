use symtype::enumeration::{enumerate_types, TypeRecord};
use symtype::formats::{self, builtin, parse_document, Document, FaceWalks};
use symtype::typegraph::extend;
use symtype::FlagGraph;

fn round_trip(doc: Document) {
    let text = doc.serialize();
    let back = parse_document(&text).unwrap();
    assert_eq!(back, doc);
    assert_eq!(back.serialize(), text);
}

/// `{4,4}` on the Klein bottle: an `m x n` grid whose last row is glued to
/// the first with a reflection.
fn klein_bottle(m: usize, n: usize) -> FaceWalks {
    let v = |x: usize, y: usize| y * m + x % m;
    let mut faces = Vec::new();
    for y in 0..n {
        for x in 0..m {
            let (a, b) = (v(x, y), v(x + 1, y));
            let (c, d) = if y + 1 < n {
                (v(x + 1, y + 1), v(x, y + 1))
            } else {
                (v((2 * m - x - 1) % m, 0), v((m - x) % m, 0))
            };
            faces.push(vec![a, b, c, d]);
        }
    }
    FaceWalks::new(faces)
}

#[test]
fn builtins_round_trip_in_flg_and_map() {
    for (_, g) in builtin::builtin_maps() {
        round_trip(Document::Flg(g.clone()));
        round_trip(Document::Map(FaceWalks::from_flag_graph(&g)));
    }
}

#[test]
fn enumerated_types_round_trip() {
    for k in 1..=7 {
        for code in enumerate_types(k) {
            let record = TypeRecord::new(code);
            let t = record.type_graph();
            round_trip(Document::Stg(t.clone()));
            for d in &record.polarities {
                round_trip(Document::Xstg(extend(&t, d.clone()).unwrap()));
            }
        }
    }
}

#[test]
fn klein_bottle_by_hand() {
    let g = klein_bottle(3, 4).to_flag_graph().unwrap();
    let text = formats::serialize_flg(&g);
    let back: FlagGraph = formats::parse_flg(&text).unwrap();
    let e = back.elements();
    assert_eq!(e.euler, 0);
    assert!(!e.orientable);
    assert_eq!(e.schlafli, Some((4, 4)));
    assert_eq!(back.n(), 96);
}

#[test]
fn xstg_of_two_02_with_identity() {
    let x = formats::parse_xstg("xstg 1\nn 2\nt0 0 1\nt1 1 0\nt2 0 1\nd 0 1\n").unwrap();
    assert!(x.is_proper());
}

#[test]
fn tetrahedron_from_map_text() {
    let text = "map 1\n# four triangles\n0 1 2\n0 3 1\n1 3 2\n0 2 3\n";
    let walks = formats::parse_map(text).unwrap();
    let g = walks.to_flag_graph().unwrap();
    assert_eq!(g.n(), 24);
    assert_eq!(symtype::quotient(&g).k(), 1);
}
