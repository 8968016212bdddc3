#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace scribe::audio {

// fixed frontend geometry: 16 kHz input, 25 ms windows, 10 ms hop,
// 80 mel channels over 0..8 kHz, 100 frames/second
inline constexpr int kSampleRate  = 16000;
inline constexpr int kNFft        = 400;
inline constexpr int kHopLength   = 160;
inline constexpr int kNMels       = 80;
inline constexpr int kChunkFrames = 3000; // one 30 s model window
inline constexpr double kChunkSeconds = 30.0;
inline constexpr float kLogFloor  = -10.0f; // log10(1e-10)
inline constexpr float kSilenceValue = -1.0f; // normalized mel value used for padding

struct AudioBuffer {
    std::vector<float> samples; // mono, amplitudes in [-1, 1]
    int sample_rate = 0;

    double duration_s() const {
        return sample_rate > 0 ? double(samples.size()) / sample_rate : 0.0;
    }
};

struct MelSpectrogram {
    std::vector<float> data; // row-major [n_frames][n_mels]
    int n_frames = 0;
    int n_mels = 0;

    float* row(int t) { return data.data() + size_t(t) * n_mels; }
    const float* row(int t) const { return data.data() + size_t(t) * n_mels; }
};

enum class NoiseKind { white, external_sample };

struct NoiseSpec {
    NoiseKind kind = NoiseKind::white;
    double snr_db = 0.0;
};

// WAV ingestion: RIFF little-endian, PCM16 or float32, 1-2 channels.
// Stereo is downmixed by averaging; PCM is scaled by 1/32768.
AudioBuffer load_wav(const std::string& path);

// 16-bit PCM mono writer (fixtures and noise dumps)
void save_wav(const std::string& path, const AudioBuffer& audio);

// windowed-sinc resampler: Kaiser beta 8.0, 64 taps.
// Output length is round(n * target / source); same-rate input is returned as-is.
AudioBuffer resample(const AudioBuffer& audio, int target_rate);

// normalized log-Mel features: Hann window, reflective center padding,
// n_frames = ceil(n_samples / 160). Values lie in [-1, 1]: per-spectrogram
// dynamic range is clamped to 8 decades below the max and mapped affinely.
MelSpectrogram log_mel_spectrogram(const AudioBuffer& audio);

// pre-log intermediate (mel-projected power per frame), exposed for energy checks
MelSpectrogram mel_power_spectrogram(const AudioBuffer& audio);

// truncate or right-pad with the silence value
MelSpectrogram pad_or_trim(const MelSpectrogram& mel, int target_frames = kChunkFrames);

// frame window [start, start+len) clamped to the source, padded if short
MelSpectrogram slice_frames(const MelSpectrogram& mel, int start, int len);

// seeded Gaussian noise, sigma 0.2, clipped to [-1, 1]
AudioBuffer white_noise(size_t n_samples, int sample_rate, uint64_t seed);

// mix noise into signal at the requested SNR. The gain is derived from the
// mean squared amplitude of each buffer over its full length; noise is
// tiled or truncated to the signal length.
AudioBuffer add_noise(const AudioBuffer& signal, const AudioBuffer& noise, double snr_db);

// convenience wrapper: white noise comes from the seed, external noise from `external`
AudioBuffer apply_noise(const AudioBuffer& signal, const NoiseSpec& spec, uint64_t seed,
                        const AudioBuffer* external = nullptr);

// triangular mel filter bank, Slaney mel scale with area normalization,
// row-major [n_mels][n_fft/2 + 1]
std::vector<float> mel_filter_bank(int n_mels, int n_fft, int sample_rate,
                                   double fmin, double fmax);

} // namespace scribe::audio
