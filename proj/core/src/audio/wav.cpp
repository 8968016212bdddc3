#include "scribe/audio.hpp"
#include "scribe/error.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <fstream>

namespace scribe::audio {

namespace {

uint32_t read_u32(std::istream& in) {
    unsigned char b[4];
    in.read(reinterpret_cast<char*>(b), 4);
    return uint32_t(b[0]) | uint32_t(b[1]) << 8 | uint32_t(b[2]) << 16 | uint32_t(b[3]) << 24;
}

uint16_t read_u16(std::istream& in) {
    unsigned char b[2];
    in.read(reinterpret_cast<char*>(b), 2);
    return uint16_t(b[0]) | uint16_t(b[1]) << 8;
}

void write_u32(std::ostream& out, uint32_t v) {
    char b[4] = {char(v & 0xff), char(v >> 8 & 0xff), char(v >> 16 & 0xff), char(v >> 24 & 0xff)};
    out.write(b, 4);
}

void write_u16(std::ostream& out, uint16_t v) {
    char b[2] = {char(v & 0xff), char(v >> 8 & 0xff)};
    out.write(b, 2);
}

constexpr uint16_t kFormatPcm = 1;
constexpr uint16_t kFormatFloat = 3;

} // namespace

AudioBuffer load_wav(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(errc::io, "cannot open " + path);

    char magic[4];
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "RIFF", 4) != 0) fail(errc::format, path + ": not a RIFF file");
    read_u32(in); // riff size, unused
    in.read(magic, 4);
    if (!in || std::memcmp(magic, "WAVE", 4) != 0) fail(errc::format, path + ": not a WAVE file");

    uint16_t format = 0, channels = 0, bits = 0;
    uint32_t rate = 0;
    bool have_fmt = false;
    std::vector<char> payload;

    while (in.peek() != EOF) {
        char id[4];
        in.read(id, 4);
        uint32_t size = read_u32(in);
        if (!in) fail(errc::format, path + ": truncated chunk header");

        if (std::memcmp(id, "fmt ", 4) == 0) {
            if (size < 16) fail(errc::format, path + ": fmt chunk too small");
            format = read_u16(in);
            channels = read_u16(in);
            rate = read_u32(in);
            read_u32(in); // byte rate
            read_u16(in); // block align
            bits = read_u16(in);
            in.seekg(size - 16, std::ios::cur);
            have_fmt = true;
        } else if (std::memcmp(id, "data", 4) == 0) {
            payload.resize(size);
            in.read(payload.data(), size);
            if (size_t(in.gcount()) != size) fail(errc::format, path + ": truncated data chunk");
        } else {
            in.seekg(size + (size & 1), std::ios::cur); // chunks are word aligned
        }
        if (!in) fail(errc::format, path + ": truncated chunk");
    }

    if (!have_fmt) fail(errc::format, path + ": missing fmt chunk");
    if (payload.empty()) fail(errc::format, path + ": missing data chunk");
    if (rate == 0) fail(errc::format, path + ": zero sample rate");
    if (channels < 1 || channels > 2) fail(errc::unsupported, path + ": only mono/stereo supported");

    size_t bytes_per_sample;
    if (format == kFormatPcm && bits == 16) {
        bytes_per_sample = 2;
    } else if (format == kFormatFloat && bits == 32) {
        bytes_per_sample = 4;
    } else {
        fail(errc::unsupported,
             path + ": unsupported codec (format " + std::to_string(format) + ", " +
                 std::to_string(bits) + " bits)");
    }

    size_t frame_bytes = bytes_per_sample * channels;
    size_t n_frames = payload.size() / frame_bytes;

    AudioBuffer out;
    out.sample_rate = int(rate);
    out.samples.resize(n_frames);

    const unsigned char* p = reinterpret_cast<const unsigned char*>(payload.data());
    for (size_t i = 0; i < n_frames; ++i) {
        float acc = 0.0f;
        for (int c = 0; c < channels; ++c) {
            const unsigned char* s = p + (i * channels + c) * bytes_per_sample;
            if (bytes_per_sample == 2) {
                int16_t v = int16_t(uint16_t(s[0]) | uint16_t(s[1]) << 8);
                acc += float(v) / 32768.0f;
            } else {
                uint32_t u = uint32_t(s[0]) | uint32_t(s[1]) << 8 | uint32_t(s[2]) << 16 |
                             uint32_t(s[3]) << 24;
                float v;
                std::memcpy(&v, &u, 4);
                acc += std::clamp(v, -1.0f, 1.0f);
            }
        }
        out.samples[i] = acc / float(channels);
    }
    return out;
}

void save_wav(const std::string& path, const AudioBuffer& audio) {
    if (audio.sample_rate <= 0) fail(errc::validation, "save_wav: sample_rate must be positive");
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(errc::io, "cannot write " + path);

    uint32_t data_bytes = uint32_t(audio.samples.size() * 2);
    out.write("RIFF", 4);
    write_u32(out, 36 + data_bytes);
    out.write("WAVE", 4);
    out.write("fmt ", 4);
    write_u32(out, 16);
    write_u16(out, kFormatPcm);
    write_u16(out, 1);
    write_u32(out, uint32_t(audio.sample_rate));
    write_u32(out, uint32_t(audio.sample_rate) * 2);
    write_u16(out, 2);
    write_u16(out, 16);
    out.write("data", 4);
    write_u32(out, data_bytes);
    for (float v : audio.samples) {
        float x = std::clamp(v, -1.0f, 1.0f);
        int s = int(std::lround(x * 32767.0f));
        write_u16(out, uint16_t(int16_t(s)));
    }
    if (!out) fail(errc::io, "short write to " + path);
}

} // namespace scribe::audio
