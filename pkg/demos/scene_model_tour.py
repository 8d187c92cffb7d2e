"""A tour of the scene model on a 32x32 canvas with an untrained network.

Runs in a few seconds:
    python3 demos/scene_model_tour.py [out_dir]

1. Build a small LAVAE and draw scenes from a count prior restricted to {2, 3}.
2. Push one rendered scene through the inference side: logit map, counter,
   sampled locations, appearance means.
3. Apply the latent edits (swap, move, appearance offset) and save a strip.
"""

import os
import sys

import torch

from lavae.figures import grid, location_summary, save_png, write_sidecar
from lavae.generative import LatentScene, render_scene, sample_scene
from lavae.inference import count_objects, logit_scale
from lavae.manipulation import decode_scene, move, swap, traverse_appearance
from lavae.model import LAVAE, ModelConfig, derive_generator

out_dir = sys.argv[1] if len(sys.argv) > 1 else "demos/out"
os.makedirs(out_dir, exist_ok=True)
torch.manual_seed(0)

cfg = ModelConfig(canvas=(32, 32), latent_dim=8, encoder_width=8, encoder_blocks=1, sprite_size=9, decoder_width=8)
model = LAVAE(cfg).eval()
print("parameters:", model.parameter_breakdown())

# -- 1. ancestral samples ------------------------------------------------------
probs = torch.zeros(cfg.max_objects + 1)
probs[[2, 3]] = 0.5
g = derive_generator(0, "tour")
samples = [sample_scene(probs, model.decoder, cfg.canvas, g) for _ in range(8)]
for k, (scene, _, _) in enumerate(samples):
    print(f"sample {k}: n={scene.n} cells={[divmod(c, 32) for c in scene.locations]}")
save_png(grid([lam for _, lam, _ in samples] + [x for _, _, x in samples], ncol=8), f"{out_dir}/samples.png")

# -- 2. the counter reads peaks off the location logit map ----------------------
# Plant three peaks above the threshold of 4 * gamma. Even a peak holding a
# third of the softmax mass (logit_scale) sits below it on a 32x32 canvas.
h = torch.zeros(32, 32)
for r, c in ((4, 4), (10, 20), (25, 7)):
    h[r, c] = 20.0
third = logit_scale(32 * 32, 3, 1 / 3 - 1e-6)
print(f"threshold {cfg.gamma * 4:.1f}, one-third-mass logit {third:.2f}, counted {count_objects(h, model.counter)}")
h[25, 7] = 10.0  # now below threshold
print("after lowering one peak:", count_objects(h, model.counter))

x = samples[0][2][None]
post = model.infer(x, tau=0.5, seed=1)
print("untrained model on a sample: n_hat =", int(post.n[0]), "(flat logits start with no objects)")

# -- 3. edits on a hand-made scene --------------------------------------------
scene = LatentScene([2 * 32 + 3, 18 * 32 + 20], torch.randn(2, cfg.latent_dim))
variants = [scene, swap(scene, 0, 1), move(scene, 0, 20 * 32 + 2)] + traverse_appearance(scene, 1, 0, -3, 3, 4)
lams = [decode_scene(model, v) for v in variants]
assert torch.equal(decode_scene(model, swap(swap(scene, 0, 1), 0, 1)), lams[0])
panels = lams + [location_summary(scene.locations, cfg.canvas, 3)]
path = f"{out_dir}/edits.png"
save_png(grid(panels, ncol=len(panels)), path)
write_sidecar(path, {"variants": [v.to_json(32) for v in variants]})
print("wrote", out_dir)
