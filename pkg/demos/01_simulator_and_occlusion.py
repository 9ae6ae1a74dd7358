#!/usr/bin/env python3
"""Tour of the tabletop simulator and its occlusion mechanic.

Renders an episode's first frame next to a frame where the arm hides the
target object, dumps both as PPM images, and runs the scripted expert across
all task families.
"""

from dataclasses import replace
from pathlib import Path

import numpy as np

from anchorlab import RngStream, TaskSpec, expert_action, render, reset, step, success, write_ppm
from anchorlab.render import RenderConfig, count_color
from anchorlab.sim import MAX_EPISODE_STEPS, TASK_FAMILIES, WorldState

out = Path(__file__).parent / "out"
out.mkdir(exist_ok=True)

task = TaskSpec.for_family("carrot_on_plate")
state = reset(task, RngStream(7, "demo"))
cfg = RenderConfig()

anchor_frame = render(state, cfg)
write_ppm(anchor_frame, out / "anchor_frame.ppm")

# park the gripper right above the carrot: the arm stripe swallows it
carrot = state.find_kind("carrot")
hover = WorldState(
    replace(state.gripper, x=carrot.x, y=min(carrot.y + 0.18, 1.0)),
    state.objects,
    state.receptacles,
    1,
)
occluded_frame = render(hover, cfg)
write_ppm(occluded_frame, out / "occluded_frame.ppm")

print("carrot pixels in the anchor frame: ", count_color(anchor_frame, carrot.color))
print("carrot pixels under the arm stripe:", count_color(occluded_frame, carrot.color))
print(f"frames written to {out}/anchor_frame.ppm and {out}/occluded_frame.ppm")

print("\nscripted expert, 50 seeds per family:")
for family in TASK_FAMILIES:
    t = TaskSpec.for_family(family)
    wins, steps = 0, []
    for seed in range(50):
        s = reset(t, RngStream(seed, family))
        for i in range(MAX_EPISODE_STEPS):
            s, _ = step(s, expert_action(s, t))
            if success(s, t):
                wins += 1
                steps.append(i + 1)
                break
    print(f"  {t.instruction:28s} {wins}/50 solved, median {int(np.median(steps))} steps")
