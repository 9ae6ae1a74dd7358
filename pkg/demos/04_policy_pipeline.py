#!/usr/bin/env python3
"""End-to-end pipeline at toy scale: generate demonstrations, pretrain the
frame-pair encoder on its displacement pretext, train an anchored policy,
and evaluate it closed-loop.

A few minutes on a laptop. The point is the machinery, not competence: at
this step budget the policy has barely begun to couple vision to actions
(expect near-zero success rates). Training step counts in the thousands and
the default dataset size are where behavior emerges; see
scripts/directional_experiment.py for a protocol at that scale."""

import json
from pathlib import Path

from anchorlab import ExperimentConfig, Policy
from anchorlab.evaluator import evaluate
from anchorlab.params import load_checkpoint
from anchorlab.policy import init_from
from anchorlab.sampling import build_dataset, load_store
from anchorlab.trainer import TrainConfig, se_pretrain, train

out = Path(__file__).parent / "out" / "pipeline"
out.mkdir(parents=True, exist_ok=True)
exp = ExperimentConfig({"policy": {"context_mode": "anchor_i0", "se_mode": "frozen"}})

data = out / "data"
if not (data / "manifest.json").exists():
    print("[1/4] generating 24 expert episodes per family")
    build_dataset(data, 24, seed=5, fingerprint=exp.fingerprint())
store = load_store(data / "manifest.json", "train")
eval_store = load_store(data / "manifest.json", "eval", successful_only=False)
print(f"      {len(store.episodes)} training episodes, {store.total_steps} steps")

se_ckpt = out / "se.avck"
if not se_ckpt.exists():
    print("[2/4] displacement-pretext pretraining of the spatial encoder (400 steps)")
    _, _, r2 = se_pretrain(
        store, eval_store, exp.policy_config(),
        TrainConfig.for_phase("se-pretrain", steps=400, batch_size=16, seed=0),
        out_path=se_ckpt,
    )
    print(f"      held-out displacement R^2: {r2:.3f}")

print("[3/4] policy training with anchor conditioning (600 steps)")
policy = Policy.init(exp.policy_config(), seed=0, norm_stats=store.norm_stats)
init_from(policy, load_checkpoint(se_ckpt))
log = train(
    policy, store,
    TrainConfig.for_phase("pretrain", steps=600, batch_size=16, lr=5e-4, seed=0),
    checkpoint_path=out / "policy.avck",
)
print(f"      loss {log.entries[0]['loss']:.3f} -> {log.entries[-1]['loss']:.3f}")

print("[4/4] closed-loop evaluation (6 trials per family, 10 denoising steps)")
report = evaluate(policy, trials=6, seed=0, k_steps=10, jobs=2, config_fingerprint=exp.fingerprint())
(out / "report.json").write_text(json.dumps(report, indent=2, sort_keys=True))
for fam, cell in report["tasks"].items():
    print(f"      {fam:22s} sr={cell['sr']:.2f}  ci95=[{cell['ci95'][0]:.2f}, {cell['ci95'][1]:.2f}]")
print(f"      average {report['average']:.2f}, retries/episode {report['retries']['overall']:.2f}, "
      f"inference {report['latency_ms']['p50']:.0f} ms p50")
print(f"      full report at {out / 'report.json'}")
