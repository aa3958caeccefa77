//! Which library operations each subcommand reaches, with a runnable example.

pub struct Entry {
    pub path: &'static str,
    pub ops: &'static [&'static str],
    pub example: &'static [&'static str],
}

pub const ENTRIES: &[Entry] = &[
    Entry {
        path: "partitions enumerate",
        ops: &["parse_partition", "enumerate_all", "enumerate_noncrossing", "enumerate_interval"],
        example: &["partitions", "enumerate", "4", "--kind", "all"],
    },
    Entry {
        path: "partitions info",
        ops: &[
            "parse_partition",
            "is_noncrossing",
            "opposite",
            "thicken",
            "expand",
            "classify_blocks",
            "crossing_number",
            "has_inner_singleton",
            "kreweras",
        ],
        example: &["partitions", "info", "1 4|2 3", "--thicken", "2", "--expand", "1,2,1,1"],
    },
    Entry {
        path: "partitions lattice",
        ops: &["leq", "meet", "join", "direct_sum"],
        example: &["partitions", "lattice", "1|2|3 4", "1 2|3 4"],
    },
    Entry {
        path: "partitions mobius",
        ops: &["mobius_nc", "mobius_p"],
        example: &["partitions", "mobius", "1|2|3|4", "1 2 3 4", "--lattice", "all"],
    },
    Entry { path: "partitions kreweras", ops: &["kreweras"], example: &["partitions", "kreweras", "1 2|3"] },
    Entry { path: "partitions crossing", ops: &["crossing_number"], example: &["partitions", "crossing", "1 3|2 4"] },
    Entry {
        path: "transform m2c",
        ops: &["cumulants_from_moments"],
        example: &["transform", "m2c", "1,2,5,14"],
    },
    Entry {
        path: "transform c2m",
        ops: &["moments_from_cumulants"],
        example: &["transform", "c2m", "1,1,1,1"],
    },
    Entry {
        path: "transform alt-moment",
        ops: &["alternating_moment"],
        example: &["transform", "alt-moment", "--x-cumulants", "0,1,0,0", "--y-moments", "1,2,5,14", "--n", "2"],
    },
    Entry {
        path: "transform s-transform",
        ops: &["r_series", "s_from_r", "r_from_s"],
        example: &["transform", "s-transform", "1,1,1,1,1"],
    },
    Entry {
        path: "transform block-product",
        ops: &["m_pi", "r_pi"],
        example: &["transform", "block-product", "1 3|2", "1,2,5", "--of", "moments"],
    },
    Entry { path: "transform scale", ops: &["scale_time"], example: &["transform", "scale", "1,1,1", "--t", "1/2"] },
    Entry { path: "transform center", ops: &["center"], example: &["transform", "center", "3,1,1"] },
    Entry {
        path: "transform sandwich",
        ops: &["sandwich_transform"],
        example: &["transform", "sandwich", "1,2,5"],
    },
    Entry {
        path: "st",
        ops: &["st_expectation"],
        example: &["st", "1 4|2 3", "--process", "poisson", "--t", "2"],
    },
    Entry {
        path: "pr",
        ops: &["pr_expectation"],
        example: &["pr", "1 4|2|3", "--process", "semicircular", "--t", "1"],
    },
    Entry {
        path: "tables",
        ops: &["pr_from_st", "st_from_pr"],
        example: &["tables", "1 2|3", "--direction", "pr-to-st"],
    },
    Entry {
        path: "multiplicativity",
        ops: &["multiplicativity_check"],
        example: &["multiplicativity", "1 2|3 4", "--process", "poisson"],
    },
    Entry {
        path: "inner-singleton",
        ops: &["inner_singleton_vanishing"],
        example: &["inner-singleton", "1 3|2", "--process", "poisson", "--centered"],
    },
    Entry {
        path: "product",
        ops: &[
            "brownian_product_measure",
            "poisson_separation_predicate",
            "poisson_product_measure",
        ],
        example: &["product", "1 4|2 3", "--process", "poisson", "--t", "2"],
    },
    Entry {
        path: "ito",
        ops: &["ito_expand", "ito_expectation", "ito_mobius_expand"],
        example: &["ito", "1 3|2 4", "--process", "semicircular", "--t", "2"],
    },
    Entry {
        path: "finite-n",
        ops: &["finite_n_expectation", "finite_n_laurent"],
        example: &["finite-n", "1 3|2 4", "--process", "poisson", "--t", "1", "--symbolic"],
    },
    Entry { path: "vanishing", ops: &["vanishing_order_check"], example: &["vanishing", "1 4|2 5|3 6"] },
    Entry {
        path: "diagonal",
        ops: &["diagonal_cumulant", "delta_word_moment"],
        example: &["diagonal", "--word", "1,2,1", "--process", "poisson"],
    },
    Entry {
        path: "sandwich",
        ops: &["sandwich_limit"],
        example: &["sandwich", "--powers", "1,2", "--z", "3", "--process", "poisson"],
    },
    Entry {
        path: "polys",
        ops: &[
            "ks_general",
            "ks_centered",
            "alpha",
            "beta",
            "specialize_brownian",
            "specialize_poisson",
            "poisson_charlier",
            "compound_ks",
            "inner_product",
        ],
        example: &["polys", "centered", "--n", "0..4", "--check-orthogonality"],
    },
    Entry {
        path: "verify",
        ops: &["inner_product", "mobius_nc", "mobius_p", "vanishing_order_check", "ks_general", "ks_centered"],
        example: &["verify", "orthogonality", "--process", "poisson", "--t", "1", "--max-n", "5"],
    },
];
