"""From (outfit, pose) to network inputs, and one pass through each net.

Shows the 18-channel article stack, the 16-channel keypoint heatmap, the
512-d condition embedding, the style vector, a synthesis pass, and both
critics scoring the result.
"""

from pathlib import Path

import numpy as np
import torch

from stylecond import conditioning as cond
from stylecond import synth_data as sd
from stylecond.discriminator import Discriminator, score_conditional, score_unconditional
from stylecond.generator import Generator, SynthesisConfig, broadcast_styles, synthesize
from stylecond.imaging import image_grid, save_png

OUT = Path(__file__).parent / "out"
OUT.mkdir(exist_ok=True)

rng = np.random.default_rng(7)
outfit = sd.sample_outfit(rng, occupancy_prob=1.0)
pose = sd.sample_pose(rng)

# Condition pieces. Empty slots would appear as constant 0.5 gray channels.
stack = cond.stack_articles(outfit, 64, 48)
heat = cond.keypoints_to_heatmap(pose, 64, 48)
print(f"article stack {stack.shape}, heatmap {heat.shape} "
      f"(peak {heat.max():.3f} at sigma {cond.default_sigma(64)} px)")

# Heatmap montage: each channel as a gray image.
montage = image_grid([np.repeat(h[None], 3, axis=0) for h in heat], columns=4)
save_png(montage, OUT / "heatmaps.png")
print("wrote heatmaps.png")

# Condition embedding and the conditional style input.
embed_net = cond.ConditionEmbeddingNet(seed=0)
embedding = cond.embed_condition(stack, heat, embed_net)
latent = rng.normal(size=512).astype(np.float32)
style_input = cond.make_style_input(latent, embedding)
print(f"embedding {embedding.shape}, style input {style_input.shape} "
      f"(latent occupies the first 512 positions)")

# A conditional generator end to end (untrained weights; texture is noise).
config = SynthesisConfig(condition_dim=512)
generator = Generator(config, seed=1)
condition = torch.from_numpy(cond.condition_tensor(outfit, pose, 64, 48)).unsqueeze(0)
z = torch.from_numpy(latent).unsqueeze(0)
with torch.no_grad():
    style = generator.style_for(z, condition)
image = synthesize(generator, broadcast_styles(style, config.total_layers))[0]
save_png(image, OUT / "untrained_sample.png")
print(f"generator output {image.shape}, range [{image.min():.2f}, {image.max():.2f}]")

# Critics: the unconditional trunk scores the image alone; the conditional
# critic combines image features with a separate condition embedding via a
# projection term.
disc_u = Discriminator(SynthesisConfig(), conditional=False, seed=2)
disc_c = Discriminator(config, conditional=True, seed=3)
print(f"unconditional logit: {score_unconditional(image, disc_u):+.4f}")
print(f"conditional logit:   {score_conditional(image, stack, heat, disc_c):+.4f}")
