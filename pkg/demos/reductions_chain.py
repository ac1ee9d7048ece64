"""Set cover instance -> path cover of a tree -> k-edge-connected subgraph, with optima at each step."""
from cutgap.bruteforce import min_cost_kecss
from cutgap.reductions import (all_setcover_instances, cover_from_witness, kecss_from_pcot, pcot_opt,
                               setcover_opt, setcover_to_pcot)

for sc in all_setcover_instances(4):
    best, cover = setcover_opt(sc)
    inst = setcover_to_pcot(sc)
    res = pcot_opt(inst)
    print(f"triples={sc.triples}")
    print(f"    set cover optimum {best} {cover}; path cover optimum {res.size} = {sc.k} + {best}")
    print(f"    cover read back from the path cover: {cover_from_witness(sc, res.witness)}")
    for k in (2, 3):
        cost, _ = min_cost_kecss(kecss_from_pcot(inst, k), k)
        print(f"    {k}-ECSS optimum of the encoding: {cost}")
