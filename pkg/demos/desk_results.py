"""Summarise the desk-scale runs once training and evaluation have finished.

    python3 runs/train_desk.py dsprites baseline
    python3 runs/eval_desk.py
    python3 demos/desk_results.py [out_dir]

Prints the learning curves at a few checkpoints, the evaluation summary and
the paired comparison, then renders samples, inspections and a swap with the
command-line tool.
"""

import json
import os
import subprocess
import sys

out_dir = sys.argv[1] if len(sys.argv) > 1 else "demos/out"
os.makedirs(out_dir, exist_ok=True)


def curve(name, keys):
    path = f"runs/desk_{name}/metrics.jsonl"
    if not os.path.exists(path):
        print(f"{path} missing")
        return
    with open(path) as f:
        recs = [json.loads(line) for line in f]
    print(f"{name}: {len(recs)} steps")
    for r in recs[:: max(1, len(recs) // 10)] + recs[-1:]:
        print("  " + "  ".join(f"{k}={r[k]:.3f}" if isinstance(r[k], float) else f"{k}={r[k]}" for k in keys if k in r))


curve("dsprites", ["step", "elbo", "kl_app", "kl_loc", "n_mean", "tau", "p_force1"])
curve("baseline", ["step", "elbo", "kl", "beta"])

for name in ("eval_lavae_test", "eval_lavae_gen7", "eval_baseline_test", "compare"):
    path = f"runs/desk_eval/{name}.json"
    if os.path.exists(path):
        with open(path) as f:
            d = json.load(f)
        print(name, {k: v for k, v in d.items() if k != "per_image"})

ckpt = "runs/desk_dsprites/checkpoint.pt"
if os.path.exists(ckpt):
    data = "runs/data_dsprites_desk"
    run = lambda *a: subprocess.run(["lavae", *a], check=True)
    run("sample", "--checkpoint", ckpt, "--out", f"{out_dir}/desk_samples.png")
    run("sample", "--checkpoint", ckpt, "--count-prior", "uniform:4,5", "--out", f"{out_dir}/desk_samples_4_5.png")
    run("inspect", "--checkpoint", ckpt, "--data", data, "--indices", "0,1,2,3", "--out", f"{out_dir}/inspect")
    run("inspect", "--checkpoint", ckpt, "--data", data, "--split", "gen7", "--indices", "0,1", "--out", f"{out_dir}/inspect")
    run("manipulate", "swap", "--checkpoint", ckpt, "--data", data, "--index", "3", "--out", f"{out_dir}/swap.png")
