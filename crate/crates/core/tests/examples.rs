macro_rules! example {
    ($name:ident, $file:literal) => {
        mod $name {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }

        #[test]
        fn $name() {
            $name::run_example().unwrap();
        }
    };
}

example!(root_systems, "root_systems.rs");
example!(theta_correspondence, "theta_correspondence.rs");
example!(irreducibility_check, "irreducibility_check.rs");
example!(threshold_sweep, "threshold_sweep.rs");
example!(closed_form_tables, "closed_form_tables.rs");
example!(counterexample_search, "counterexample_search.rs");
example!(graded_dimensions, "graded_dimensions.rs");
