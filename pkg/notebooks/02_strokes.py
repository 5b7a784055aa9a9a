# %% [markdown]
# # From pixels to pen strokes
#
# Each digit is thinned to a one-pixel skeleton (Zhang-Suen) and then walked
# greedily from its topmost-leftmost pixel. The walk gives a sequence of
# (row, col) points scaled to [0, 1], cut or zero-padded to 50 steps.
#
# Needs MNIST in ``data/mnist`` (see the README).

# %%
import numpy as np

from noisyrnn import image_to_stroke, images_to_strokes, load_mnist
from noisyrnn.strokes import stroke_length_histogram, zhang_suen

digits = load_mnist("data/mnist", "test").head(200)
img = digits.images[0]
skel = zhang_suen(img > 0.5)
for r in range(4, 24):
    print("".join("#" if skel[r, c] else ("." if img[r, c] > 0.5 else " ") for c in range(28)))

# %% [markdown]
# The skeleton pixels in visiting order. Jumps between disconnected pieces go
# to the nearest unvisited pixel.

# %%
s = image_to_stroke(img, int(digits.labels[0]))
print("label", s.label, "length", s.length)
print(np.round(s.points[:s.valid_length] * 27).astype(int).tolist())

# %% [markdown]
# Most digits need between 20 and 60 points, so 50 steps keeps nearly all of
# each stroke.

# %%
ds = images_to_strokes(digits)
hist = stroke_length_histogram(ds)
lengths = np.repeat(list(hist), list(hist.values()))
print("median", np.median(lengths), "in [20, 60]:", np.mean((lengths >= 20) & (lengths <= 60)))
print("truncated:", np.mean(lengths > 50))
