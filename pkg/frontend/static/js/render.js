/** Pure view-model helpers: everything displayed derives from service
 * responses through these functions, so tests can pin the mapping. */
export function adviceView(advice) {
    return {
        posteriorExact: advice.posteriorSwitchWin.exact,
        posteriorPercent: `${(advice.posteriorSwitchWin.decimal * 100).toFixed(1)}%`,
        recommendation: advice.recommendedAction === "indifferent"
            ? "either door is as good"
            : `you should ${advice.recommendedAction}`,
        valueExact: advice.bayesValueForPriors.exact,
        bestPicks: advice.bestPickForPriors.map((d) => `door ${d}`).join(", "),
    };
}
export function previewView(valueExact, valueDecimal, bestPicks, lambdas) {
    const crawl = lambdas.every((l) => l === "1" || l === "1/1");
    return {
        valueExact,
        valuePercent: `${(valueDecimal * 100).toFixed(1)}%`,
        bestPicks: bestPicks.map((d) => `door ${d}`).join(", "),
        hostLabel: crawl ? "crawl host (always offers the smaller door)" : "custom host",
    };
}
export function zeroSumSummary(doc) {
    return [
        `game value ${doc.value}`,
        `contestant: pick uniformly, always switch (weights ${doc.conieMinimax
            .filter((w) => w !== "0")
            .join(", ")})`,
        `host: hide uniformly (weights ${doc.monteMinimax.filter((w) => w !== "0").join(", ")})`,
    ];
}
export function nashSummary(doc) {
    const lines = doc.fullySupportedFamilies.map((family) => `case ${family.case}: least likely doors {${family.leastLikelyDoors.join(",")}}, ` +
        `contestant payoff ${family.representative.coniePayoff}`);
    if (doc.profiles) {
        lines.push(`${doc.profiles.length} equilibria from support enumeration`);
    }
    return lines;
}
