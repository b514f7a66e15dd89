use std::time::Instant;
use cubecheck::*;

fn main() {
    let t = Instant::now();
    let oracle = naive_connected_cubic_graphs(10).unwrap();
    println!("oracle n=10: {} classes in {:.2?}", oracle.len(), t.elapsed());

    let t = Instant::now();
    let entries = census(16, 1).unwrap();
    let counts: Vec<usize> = entries.iter().map(|e| e.cubic_count).collect();
    println!("census 16: counts {:?} in {:.2?}", counts, t.elapsed());

    let tco = generators::truncated_cuboctahedron();
    let tid = generators::truncated_icosidodecahedron();

    let t = Instant::now();
    let v = classify(&tco);
    println!("classify TCO: {} in {:.2?}", v.outcome.tag(), t.elapsed());

    let t = Instant::now();
    let v = classify(&tid);
    println!("classify TID: {} in {:.2?}", v.outcome.tag(), t.elapsed());

    let t = Instant::now();
    let d = tco.distances();
    let audit = claims_audit(&tco, default_cycle_bound(&d)).unwrap();
    println!("claims TCO (bound {}): passed={} convex={} in {:.2?}", default_cycle_bound(&d), audit.passed(), audit.convex_cycle_count, t.elapsed());

    let t = Instant::now();
    let audit = claims_audit(&tid, 10).unwrap();
    println!("claims TID (bound 10): passed={} convex={} in {:.2?}", audit.passed(), audit.convex_cycle_count, t.elapsed());

    let t = Instant::now();
    let pc = check_partial_cube(&tco).cube().unwrap();
    let mut finder = TraverseFinder::new(&pc);
    let mut searches = 0;
    for class in pc.theta().classes() {
        for i in 0..class.len() {
            for j in i + 1..class.len() {
                let tr = finder.find(class[i], class[j]).expect("traverse exists");
                verify_traverse(&pc, &tr).expect("invariants hold");
                searches += 1;
            }
        }
    }
    println!("lemma2 TCO: {} traverses in {:.2?}", searches, t.elapsed());

    let t = Instant::now();
    let cov = all_incident_pairs_covered(&tid, &tid.distances()).unwrap();
    println!("lemma5 TID: uncovered={:?} in {:.2?}", cov, t.elapsed());

    let t = Instant::now();
    let dtid = tid.distances();
    let audit = claims_audit(&tid, default_cycle_bound(&dtid)).unwrap();
    println!("claims TID (bound {}): passed={} convex={} in {:.2?}", default_cycle_bound(&dtid), audit.passed(), audit.convex_cycle_count, t.elapsed());
}
