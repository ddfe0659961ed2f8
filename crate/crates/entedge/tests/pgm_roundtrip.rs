use entedge::pgm::{read_pgm, write_pgm};
use entedge_core::GrayImage;
use proptest::prelude::*;

fn gray_image() -> impl Strategy<Value = GrayImage> {
    (1usize..=40, 1usize..=40).prop_flat_map(|(w, h)| {
        proptest::collection::vec(any::<u8>(), w * h)
            .prop_map(move |px| GrayImage::new(w, h, px).unwrap())
    })
}

proptest! {
    #[test]
    fn round_trip_is_exact(img in gray_image()) {
        prop_assert_eq!(read_pgm(&write_pgm(&img, false)).unwrap(), img.clone());
        prop_assert_eq!(read_pgm(&write_pgm(&img, true)).unwrap(), img);
    }

    #[test]
    fn reader_never_panics(bytes in proptest::collection::vec(any::<u8>(), 0..64)) {
        let _ = read_pgm(&bytes);
        let mut p5 = b"P5\n3 2\n255\n".to_vec();
        p5.extend_from_slice(&bytes);
        let _ = read_pgm(&p5);
    }
}
