#!/usr/bin/env python3
"""Denoising action head in isolation: overfit it to one constant action
chunk under a fixed conditioning vector, then watch the strided denoising
pull Gaussian noise onto that chunk."""

import numpy as np

from anchorlab import PolicyConfig, RngStream, Tensor
from anchorlab.diffusion import denoise_step, noisy_chunk
from anchorlab.params import ParamStore
from anchorlab.policy import head_forward, init_params
from anchorlab.tensor import backward, mse
from anchorlab.trainer import AdamW, TrainConfig

cfg = PolicyConfig()
full = init_params(cfg, seed=0)
params = ParamStore()
for name, t in full.items():
    if name.startswith("head."):
        params.add(name, t)

from anchorlab.diffusion import DiffusionSchedule

sched = DiffusionSchedule.make(cfg.t_train, cfg.beta_start, cfg.beta_end)
print(f"schedule: {cfg.t_train} levels, alpha_bar[0]={sched.alpha_bar[0]:.4f}, "
      f"alpha_bar[-1]={sched.alpha_bar[-1]:.4f}")

target = np.array([[0.5, -0.3, 0.0, 1.0]] * cfg.chunk, dtype=np.float32)
batch = 16
cond_vec = RngStream(0, "cond").normal((1, cfg.d_cond))
cond = Tensor(np.repeat(cond_vec, batch, axis=0))
x0 = np.repeat(target[None], batch, axis=0)

tc = TrainConfig.for_phase("pretrain", steps=800, batch_size=batch, lr=1e-3)
opt = AdamW(params, tc)
root = RngStream(0, "overfit")
for s in range(tc.steps):
    srng = root.derive(s)
    t = srng.derive("t").integers(sched.t_train, (batch,))
    eps = srng.derive("eps").normal(x0.shape)
    x_t = noisy_chunk(sched, x0, t, eps)
    for _, p in params.items():
        p.grad = None
    loss = mse(head_forward(params, cfg, x_t, t, cond, None), Tensor(eps))
    backward(loss)
    opt.step(params.gradients(), tc.lr)
    if s % 200 == 0 or s == tc.steps - 1:
        print(f"step {s:4d}  noise-prediction loss {loss.item():.4f}")

x = RngStream(3, "sample").normal((1, cfg.chunk, cfg.action_dim))
levels = sched.strided_levels(10)
print("\nstrided denoising from pure noise (10 of 100 levels):")
for j, t in enumerate(levels):
    t_next = levels[j + 1] if j + 1 < len(levels) else None
    eps_hat = head_forward(params, cfg, x, np.full(1, t), Tensor(cond_vec), None).data
    x = denoise_step(sched, x, eps_hat, t, t_next)
    print(f"  level {t:3d} -> {'clean' if t_next is None else t_next:>5}   "
          f"max |x - target| = {np.abs(np.clip(x, -1, 1)[0] - target).max():.3f}")
print(f"\ntarget chunk first row: {target[0]}")
print(f"sampled chunk first row: {np.clip(x, -1, 1)[0][0].round(3)}")
