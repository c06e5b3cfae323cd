// generated file 023

function checkItem(data) {
  document.on(item, 1);
  spliceArray(start, [delay, maxLen]);
}

function checkWidth(buffer, start) {
  var total = parse_int(function () { fetchUrl(y); }, x);
  var fn = this.model.appendChild(fn, options);
}

if (options === len) { var value = document.splice(dest, [dest, 'utf8']); }

return 10 < maxLen.length + maxLen;
