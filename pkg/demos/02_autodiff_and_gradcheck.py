#!/usr/bin/env python3
"""The differentiable substrate: train a small regression MLP with the tape
and verify its gradients against central finite differences."""

import numpy as np

from anchorlab import ParamStore, RngStream, Tensor, backward
from anchorlab.gradcheck import gradcheck
from anchorlab.params import init_normal, init_zeros
from anchorlab.tensor import add, gelu, matmul, mse
from anchorlab.trainer import AdamW, TrainConfig

rng = RngStream(0, "demo2")
params = ParamStore()
init_normal(params, "w1", (2, 32), rng, 0.5)
init_zeros(params, "b1", (32,))
init_normal(params, "w2", (32, 1), rng, 0.5)
init_zeros(params, "b2", (1,))

# target: y = sin(3x0) * x1
X = rng.derive("x").normal((256, 2))
Y = (np.sin(3.0 * X[:, 0]) * X[:, 1])[:, None].astype(np.float32)


def loss_fn(ps):
    dt = ps["w1"].dtype
    h = gelu(add(matmul(Tensor(X.astype(dt)), ps["w1"]), ps["b1"]))
    return mse(add(matmul(h, ps["w2"]), ps["b2"]), Tensor(Y.astype(dt)))


err32 = gradcheck(loss_fn, params, samples=60, analytic_dtype=np.float32)
err64 = gradcheck(loss_fn, params, samples=60, analytic_dtype=np.float64)
print(f"gradcheck before training: float32 tape {err32:.2e}, float64 shadow {err64:.2e}")

cfg = TrainConfig.for_phase("pretrain", steps=400, batch_size=256, lr=3e-3, weight_decay=1e-4)
opt = AdamW(params, cfg)
for s in range(cfg.steps):
    for _, p in params.items():
        p.grad = None
    loss = loss_fn(params)
    backward(loss)
    opt.step(params.gradients(), cfg.lr)
    if s % 100 == 0 or s == cfg.steps - 1:
        print(f"step {s:4d}  loss {loss.item():.5f}")

err32 = gradcheck(loss_fn, params, samples=60, analytic_dtype=np.float32)
err64 = gradcheck(loss_fn, params, samples=60, analytic_dtype=np.float64)
print(f"gradcheck after training: float32 tape {err32:.2e} (rounding-bound), float64 shadow {err64:.2e}")
