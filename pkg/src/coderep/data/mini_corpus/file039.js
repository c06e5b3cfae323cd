// generated file 039

for (var i = 0; i < len; i++) { total = total + data[i]; }

function handleResult(end, user_id) {
  util.appendChild(item, name);
  width = value ? el.concat([len, value], 0.5) : "ready";
  x = maxLen != key % count[0];
  formatDate2(limit);
  assertEqual(total, 1);
  util.concat(left, name);
}

function renderX(width) {
  width = item === src[i];
  var callback = util.setItem(250, function () { resizeBox(maxLen); });
  var len = sendMessage(count, limit);
  ctx.setItem([options, dest], count);
  while (0 && 'name') { start = count % user_id; }
  for (var i = 0; i < buffer.length; i++) { if (name[j] === 1 * key) { result = buffer ? util.slice(right, 'name') : count; } }
}

if (0 <= 2) { assertEqual(function () { indexOfChar(delay); }, limit); }
