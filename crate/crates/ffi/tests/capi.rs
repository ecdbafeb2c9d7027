use std::ffi::{c_char, CStr, CString};
use std::ptr;

use combinatoria_ffi::*;

fn take(s: *mut c_char) -> String {
    assert!(!s.is_null());
    let v = unsafe { CStr::from_ptr(s) }.to_str().unwrap().to_owned();
    unsafe { comb_string_free(s) };
    v
}

fn last_error() -> Option<String> {
    let p = comb_last_error_message();
    (!p.is_null()).then(|| unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned())
}

fn parse(s: &str, degree: usize) -> *mut CombPermutation {
    let c = CString::new(s).unwrap();
    let mut p = ptr::null_mut();
    assert_eq!(
        unsafe { comb_permutation_parse(c.as_ptr(), degree, &mut p) },
        CombStatus::Ok
    );
    p
}

#[test]
fn permutation_round_trip() {
    let line = [1usize, 4, 3, 6, 5, 2];
    let mut p = ptr::null_mut();
    unsafe {
        assert_eq!(
            comb_permutation_from_one_line(line.as_ptr(), line.len(), &mut p),
            CombStatus::Ok
        );
        assert_eq!(comb_permutation_degree(p), 6);

        let mut s = ptr::null_mut();
        assert_eq!(comb_permutation_cycles(p, &mut s), CombStatus::Ok);
        assert_eq!(take(s), "(1)(3)(5)(246)");

        let mut alpha = [0usize; 6];
        assert_eq!(comb_permutation_cycle_type(p, alpha.as_mut_ptr(), 6), CombStatus::Ok);
        assert_eq!(alpha, [3, 0, 1, 0, 0, 0]);
        let mut short = [0usize; 3];
        assert_eq!(
            comb_permutation_one_line(p, short.as_mut_ptr(), 3),
            CombStatus::BufferTooSmall
        );

        let mut inv = ptr::null_mut();
        assert_eq!(comb_permutation_inverse(p, &mut inv), CombStatus::Ok);
        let mut back = [0usize; 6];
        comb_permutation_one_line(inv, back.as_mut_ptr(), 6);
        assert_eq!(back, [1, 6, 3, 2, 5, 4]);
        comb_permutation_free(inv);
        comb_permutation_free(p);
    }
}

#[test]
fn composition_is_right_to_left() {
    let p = parse("(12)", 3);
    let q = parse("(13)", 3);
    let mut r = ptr::null_mut();
    unsafe {
        assert_eq!(comb_permutation_compose(p, q, &mut r), CombStatus::Ok);
        let mut s = ptr::null_mut();
        comb_permutation_cycles(r, &mut s);
        assert_eq!(take(s), "(132)");
        let wide = parse("(1234)", 0);
        let mut bad = ptr::null_mut();
        assert_eq!(
            comb_permutation_compose(p, wide, &mut bad),
            CombStatus::IncompatibleDegrees
        );
        assert!(bad.is_null());
        assert!(last_error().unwrap().contains("incompatible"));
        for h in [p, q, r, wide] {
            comb_permutation_free(h);
        }
    }
}

#[test]
fn counts_as_strings() {
    unsafe {
        let mut s = ptr::null_mut();
        assert_eq!(comb_count_partitions(100, &mut s), CombStatus::Ok);
        assert_eq!(take(s), "190569292");
        assert_eq!(comb_derangements(5, &mut s), CombStatus::Ok);
        assert_eq!(take(s), "44");
        assert_eq!(comb_personae_count(3, &mut s), CombStatus::Ok);
        assert_eq!(take(s), "32");
        let alpha = [3usize, 0, 1];
        assert_eq!(comb_class_order(6, alpha.as_ptr(), alpha.len(), &mut s), CombStatus::Ok);
        assert_eq!(take(s), "40");
        let bad = [3usize, 1];
        assert_eq!(
            comb_class_order(6, bad.as_ptr(), bad.len(), &mut s),
            CombStatus::InvalidCycleType
        );
        assert!(last_error().is_some());
        assert_eq!(comb_count_partitions(10, &mut s), CombStatus::Ok);
        assert!(last_error().is_none());
        comb_string_free(s);
    }
    assert_eq!(comb_two_part_count(7), 3);
    assert_eq!(comb_two_part_count(200), 100);
}

#[test]
fn caput_enumeration() {
    let head = CString::new("1=a").unwrap();
    let mut spec = ptr::null_mut();
    unsafe {
        assert_eq!(
            comb_caput_spec_new(4, head.as_ptr(), CombHeadMode::Loose, &mut spec),
            CombStatus::Ok
        );
        let mut s = ptr::null_mut();
        comb_caput_count(spec, &mut s);
        assert_eq!(take(s), "6");

        let mut it = ptr::null_mut();
        assert_eq!(comb_caput_iter_new(spec, &mut it), CombStatus::Ok);
        comb_caput_spec_free(spec);
        let mut seen = Vec::new();
        loop {
            let mut p = ptr::null_mut();
            assert_eq!(comb_caput_iter_next(it, &mut p), CombStatus::Ok);
            if p.is_null() {
                break;
            }
            let mut line = [0usize; 4];
            comb_permutation_one_line(p, line.as_mut_ptr(), 4);
            seen.push(line);
            comb_permutation_free(p);
        }
        comb_caput_iter_free(it);
        assert_eq!(seen.len(), 6);
        assert!(seen.iter().all(|l| l[0] == 1));
        assert!(seen.windows(2).all(|w| w[0] < w[1]));

        let bad = CString::new("9=a").unwrap();
        let mut none = ptr::null_mut();
        assert_eq!(
            comb_caput_spec_new(4, bad.as_ptr(), CombHeadMode::Exact, &mut none),
            CombStatus::InvalidHead
        );
        assert!(none.is_null());
    }
}

#[test]
fn null_and_parse_errors() {
    unsafe {
        let mut p = ptr::null_mut();
        assert_eq!(comb_permutation_parse(ptr::null(), 0, &mut p), CombStatus::NullPointer);
        let junk = CString::new("(12").unwrap();
        assert_eq!(comb_permutation_parse(junk.as_ptr(), 0, &mut p), CombStatus::Parse);
        assert_eq!(comb_count_partitions(3, ptr::null_mut()), CombStatus::NullPointer);
        assert_eq!(comb_permutation_degree(ptr::null()), 0);
        comb_permutation_free(ptr::null_mut());
        comb_string_free(ptr::null_mut());
    }
}

#[test]
fn verification() {
    let mut pass = false;
    let mut report = ptr::null_mut();
    unsafe {
        assert_eq!(comb_verify(5, &mut pass, &mut report), CombStatus::Ok);
        assert!(pass);
        assert_eq!(take(report).lines().count(), 9);
        assert_eq!(comb_verify(10, &mut pass, ptr::null_mut()), CombStatus::InvalidArgument);
    }
}
