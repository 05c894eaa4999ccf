//! Shared fixtures for the integration tests.

/// Table entries as published, in factored form: (knot, n, k, H_k).
pub const FACTORED: &[(&str, u32, u32, &str)] = &[
    ("5_2", 2, 0, "1"),
    ("5_2", 2, 1, "-q^{4}(1+q^{4})"),
    ("5_2", 2, 2, "q^{10}(1+q^{4}+q^{6}+q^{12})"),
    ("5_2", 2, 3, "-q^{18}(1+q^{4}+q^{6}+q^{8}+q^{12}+q^{14}+q^{16}+q^{24})"),
    ("5_2", 2, 4, "q^{28}(1+q^{4}+q^{6}+q^{8}+q^{10}+q^{12}+q^{14}+2q^{16}+q^{18}+q^{20}+q^{24}+q^{26}+q^{28}+q^{30}+q^{40})"),
    ("5_2", 3, 0, "1"),
    ("5_2", 3, 1, "-q^{5}(1+q^{2})^{2}(1-q^{2}+q^{4})"),
    ("5_2", 3, 2, "q^{12}(1+q^{2}+q^{4})(1+q^{6}+q^{8}+q^{16})"),
    ("5_2", 3, 3, "-q^{21}(1+q^{2})^{2}(1+q^{4})(1-q^{2}+q^{4}+q^{8}+q^{16}+q^{20}-q^{22}+q^{24}-q^{26}+q^{28})"),
    ("5_2", 3, 4, "q^{32}(1+q^{2}+q^{4}+q^{6}+q^{8})(1+q^{6}+q^{8}+q^{10}+q^{12}+q^{16}+q^{18}+2q^{20}+q^{22}+q^{24}+q^{30}+q^{32}+q^{34}+q^{36}+q^{48})"),
    ("5_2", 4, 0, "1"),
    ("5_2", 4, 1, "-q^{6}(1+q^{2}+q^{4}+q^{8}+q^{10}+q^{12})"),
    ("5_2", 4, 2, "q^{14}(1+q^{2}+q^{4})(1+q^{4}+q^{8}+q^{10}+q^{12}+q^{14}+q^{20}+q^{24})"),
    ("5_2", 4, 3, "-q^{24}(1+q^{4})^{2}(1+q^{2}+2q^{8}+2q^{10}+q^{12}+q^{14}+2q^{16}+q^{18}+q^{22}+3q^{24}+2q^{26}+q^{32}+q^{38}+q^{40})"),
    ("5_2", 4, 4, "q^{36}(1+q^{2}+q^{4})(1+q^{2}+q^{4}+q^{6}+q^{8})(1-q^{2}+q^{4}+q^{8}+q^{12}+q^{14}+q^{18}+q^{20}+2q^{24}+2q^{28}+q^{32}+q^{36}+q^{40}+q^{42}+q^{46}+q^{56}-q^{58}+q^{60})"),
    ("6_1", 2, 0, "1"),
    ("6_1", 2, 1, "1+q^{4}"),
    ("6_1", 2, 2, "1+q^{4}+q^{6}+q^{12}"),
    ("6_1", 2, 3, "1+q^{4}+q^{6}+q^{8}+q^{12}+q^{14}+q^{16}+q^{24}"),
    ("6_1", 2, 4, "1+q^{4}+q^{6}+q^{8}+q^{10}+q^{12}+q^{14}+2q^{16}+q^{18}+q^{20}+q^{24}+q^{26}+q^{28}+q^{30}+q^{40}"),
    ("6_1", 3, 0, "1"),
    ("6_1", 3, 1, "q^{-1}(1+q^{2})^{2}(1-q^{2}+q^{4})"),
    ("6_1", 3, 2, "q^{-2}(1+q^{2}+q^{4})(1+q^{6}+q^{8}+q^{16})"),
    ("6_1", 3, 3, "q^{-3}(1+q^{2})^{2}(1+q^{4})(1-q^{2}+q^{4}+q^{8}+q^{16}+q^{20}-q^{22}+q^{24}-q^{26}+q^{28})"),
    ("6_1", 3, 4, "q^{-4}(1+q^{2}+q^{4}+q^{6}+q^{8})(1+q^{6}+q^{8}+q^{10}+q^{12}+q^{16}+q^{18}+2q^{20}+q^{22}+q^{24}+q^{30}+q^{32}+q^{34}+q^{36}+q^{48})"),
    ("6_1", 4, 0, "1"),
    ("6_1", 4, 1, "q^{-2}(1+q^{2}+q^{4}+q^{8}+q^{10}+q^{12})"),
    ("6_1", 4, 2, "q^{-4}(1+q^{2}+q^{4})(1+q^{4}+q^{8}+q^{10}+q^{12}+q^{14}+q^{20}+q^{24})"),
    ("6_1", 4, 3, "q^{-6}(1+q^{4})^{2}(1+q^{2}+2q^{8}+2q^{10}+q^{12}+q^{14}+2q^{16}+q^{18}+q^{22}+3q^{24}+2q^{26}+q^{32}+q^{38}+q^{40})"),
    ("6_1", 4, 4, "q^{-8}(1+q^{2}+q^{4})(1+q^{2}+q^{4}+q^{6}+q^{8})(1-q^{2}+q^{4}+q^{8}+q^{12}+q^{14}+q^{18}+q^{20}+2q^{24}+2q^{28}+q^{32}+q^{36}+q^{40}+q^{42}+q^{46}+q^{56}-q^{58}+q^{60})"),
];
