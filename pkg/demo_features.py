from families.construction import FamilyParams, expected_fractional_matching, expected_lambda1, gen_ring_blocks
from graph_core.named_graphs import define_reference_graphs
from matching.deficiency import max_deficiency_bruteforce
from verification.campaign import fuzz_campaign
from verification.theorem_checks import check_theorem_bound, equality_outcome_of, witness_chain


def print_section(title):
    """Helper to print formatted section headers"""
    print(f"\n{'='*50}")
    print(f"  {title}")
    print(f"{'='*50}\n")


def print_report(report):
    print(f"- n={report.n}, d={report.d}")
    print(f"- lambda1 = {report.lambda1.value:.9f} (+{report.lambda1.residual:.1e})")
    print(f"- alpha*_f = {report.alpha_f} >= bound {report.bound:.9f} (slack {report.slack:.2e})")
    print(f"- k* = {report.k_star:.6f}, equality: {report.equality_flag}")


def demo_features():
    graphs = define_reference_graphs()

    # 1. Smallest non-regular extremal graph
    print_section("1. Complete Bipartite Graph K_{2,3}")
    k23 = graphs["K_2,3"]
    report = check_theorem_bound(k23)
    print_report(report)
    membership = report.membership
    print(f"- Family member with d={membership.d_found}, k={membership.k_found}")
    witness = max_deficiency_bruteforce(k23)
    print(f"- Deficiency witness S={list(witness.s)}, def*(S)={witness.deficiency}")
    chain = witness_chain(k23, witness.s)
    for link, holds in chain.links.items():
        print(f"  {link:<13} {'ok' if holds else 'FAILED'}")

    # 2. Ring of blocks
    print_section("2. Ring of Three K_{2,3} Blocks")
    params = FamilyParams.ring(2, 1, 3)
    ring = gen_ring_blocks(params.d, params.m, params.c)
    report = check_theorem_bound(ring)
    print_report(report)
    print(f"- Expected alpha*_f = {expected_fractional_matching(params, ring.n)}, "
          f"lambda1 = {expected_lambda1(params, ring.n):.9f}")
    print(f"- Equality outcome: {equality_outcome_of(report).value}")

    # 3. Regular graphs sit at k* = 0
    print_section("3. Petersen Graph (Regular Case)")
    report = check_theorem_bound(graphs["Petersen"])
    print_report(report)
    print(f"- Bipartite family member: {report.membership.is_member} "
          f"({report.membership.failure_reason.value})")
    print(f"- Equality outcome: {equality_outcome_of(report).value}")

    # 4. Random search
    print_section("4. Fuzz Campaign")
    summary = fuzz_campaign(n_max=16, d_range=(1, 3), trials=50, seed=42)
    print(f"- Trials: {summary.trials}, violations: {summary.violations}")
    print(f"- Worst slack {summary.worst_slack:.6f} on graph {summary.worst_digest}")
    print(f"- Equality hits: {len(summary.equality_hits)}")


def main():
    try:
        print("\nStarting spectral bound walkthrough...")
        demo_features()
        print("\nDemo completed successfully!")

    except Exception as e:
        print(f"\n❌ Error during demo: {str(e)}")


if __name__ == "__main__":
    main()
