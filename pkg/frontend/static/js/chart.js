/** Canvas win-rate chart: empirical trace plus exact reference lines. */
export function drawWinRateChart(canvas, rates, references) {
    const ctx = canvas.getContext("2d");
    if (!ctx)
        return;
    const { width, height } = canvas;
    const pad = { left: 34, right: 8, top: 8, bottom: 18 };
    const plotW = width - pad.left - pad.right;
    const plotH = height - pad.top - pad.bottom;
    ctx.clearRect(0, 0, width, height);
    const x = (i) => pad.left + (rates.length <= 1 ? plotW : (i / (rates.length - 1)) * plotW);
    const y = (rate) => pad.top + (1 - rate) * plotH;
    ctx.strokeStyle = "#888";
    ctx.lineWidth = 1;
    ctx.strokeRect(pad.left, pad.top, plotW, plotH);
    ctx.fillStyle = "#555";
    ctx.font = "10px sans-serif";
    for (const tick of [0, 0.5, 1]) {
        ctx.fillText(tick.toFixed(1), 8, y(tick) + 3);
    }
    for (const ref of references) {
        ctx.strokeStyle = ref.color;
        ctx.setLineDash([5, 4]);
        ctx.beginPath();
        ctx.moveTo(pad.left, y(ref.value));
        ctx.lineTo(pad.left + plotW, y(ref.value));
        ctx.stroke();
        ctx.setLineDash([]);
        ctx.fillStyle = ref.color;
        ctx.fillText(ref.label, pad.left + 4, y(ref.value) - 3);
    }
    if (rates.length > 0) {
        ctx.strokeStyle = "#1f6fb2";
        ctx.lineWidth = 1.5;
        ctx.beginPath();
        rates.forEach((rate, i) => {
            if (i === 0)
                ctx.moveTo(x(i), y(rate));
            else
                ctx.lineTo(x(i), y(rate));
        });
        ctx.stroke();
    }
}
