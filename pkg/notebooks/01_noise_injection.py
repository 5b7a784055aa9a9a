# %% [markdown]
# # Noise after every matrix-vector product
#
# An analog crossbar computes ``W @ x`` with read noise on every output line.
# We model that as additive Gaussian noise on each pre-activation, right after
# the bias. An LSTM has four such products per step (one per gate) and one for
# the classifier, so a sequence of length T sees 4T+1 independent draws.

# %%
import numpy as np

from noisyrnn import LstmModel, NoiseSpec, RngState, forward, loss_and_backward, predict

g = np.random.default_rng(0)
model = LstmModel.zeros(input_dim=3, hidden=5, classes=4, steps=6, dtype=np.float64)
model.set_params({k: g.normal(0, 0.5, v.shape) for k, v in model.params().items()})
x = g.normal(size=(8, 6, 3))

trace = forward(model, x, NoiseSpec(0.3), RngState(seed=1))
print("injection sites:", trace.injections)  # 4 * 6 + 1
print("first few:", [site for site, _ in trace.noise[:5]])

# %% [markdown]
# With sigma at zero nothing is drawn and the result is bit-identical to the
# plain forward pass.

# %%
clean = forward(model, x).logits
print(np.array_equal(forward(model, x, NoiseSpec(0.0), RngState(1)).logits, clean))

# %% [markdown]
# Training treats the noise as a constant: record it on the forward pass and
# the backward pass uses the same draws. Replaying the recording gives the same
# logits, which also makes finite-difference checks possible.

# %%
replayed = forward(model, x, replay=trace.noise)
print(np.array_equal(replayed.logits, trace.logits))

labels = g.integers(0, 4, 8)
loss, grads = loss_and_backward(replayed, labels)
p = model.W_out
h = 1e-6
p[1, 2] += h
up, _ = loss_and_backward(forward(model, x, replay=trace.noise), labels)
p[1, 2] -= h
print(f"analytic {grads['W_out'][1, 2]:.8f}  numeric {(up - loss) / h:.8f}")

# %% [markdown]
# How much does noise hurt an untrained net? Predictions start to flip once
# sigma is comparable to the spread of the logits.

# %%
base = predict(model, x)
for sigma in (0.1, 0.5, 1.0, 2.0):
    flips = np.mean([np.mean(predict(model, x, NoiseSpec(sigma), RngState(7, k)) != base) for k in range(50)])
    print(f"sigma {sigma:.1f}: {flips:.2f} of predictions change")
