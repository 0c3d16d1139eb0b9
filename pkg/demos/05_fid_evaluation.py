"""Frechet-distance evaluation with the deterministic desk extractor.

Demonstrates the closed-form scalar cases, the matrix square root, the
noise floor between two halves of the real data, and how an untrained
generator compares. Lower is better everywhere.
"""

import numpy as np
import torch

from stylecond import synth_data as sd
from stylecond.evaluation import (
    FeatureStats,
    extract_features,
    fid,
    frechet_distance,
    get_extractor,
    noise_floor_fid,
    sqrtm_product,
)
from stylecond.generator import Generator, SynthesisConfig
from stylecond.inference import sample_image

# Scalar sanity: these have pencil-and-paper values.
one = lambda m, v: FeatureStats(np.array([m], float), np.array([[v]], float), 10)
print(f"fd(N(0,1), N(3,1)) = {frechet_distance(one(0, 1), one(3, 1))}  (expect 9)")
print(f"fd(N(0,1), N(0,4)) = {frechet_distance(one(0, 1), one(0, 4))}  (expect 1)")

# The matrix square root reconstructs the covariance product.
rng = np.random.default_rng(0)
q = np.linalg.qr(rng.normal(size=(16, 16)))[0]
cov_a = q @ np.diag(rng.uniform(0.5, 2, 16)) @ q.T
cov_b = np.eye(16) * 1.5
root = sqrtm_product(cov_a, cov_b)
err = np.linalg.norm(root @ root - cov_a @ cov_b) / np.linalg.norm(cov_a @ cov_b)
print(f"sqrt reconstruction relative error: {err:.2e}")

# Real data: 200 oracle renders; features from the fixed-seed random
# projection extractor (3 stride-2 convs -> 64-d).
real = np.stack([sd.make_entry(11, i, (64, 48)).model_image for i in range(200)])
extractor = get_extractor()
print(f"noise floor (half vs half of real): {noise_floor_fid(real, extractor):.4f}")

generator = Generator(SynthesisConfig(), seed=9)
fake = np.stack([sample_image(generator, i) for i in range(100)])
print(f"fid(real, untrained generator):     {fid(real[:100], fake, extractor):.4f}")
print(f"fid(real, real):                    {fid(real, real, extractor):.6f}")

noise = rng.uniform(0, 1, size=real[:100].shape).astype(np.float32)
print(f"fid(real, uniform noise):           {fid(real[:100], noise, extractor):.4f}")
